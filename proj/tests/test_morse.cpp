#include <gtest/gtest.h>

#include <random>

#include "vth/cluster.hpp"
#include "vth/constructions.hpp"
#include "vth/errors.hpp"
#include "vth/homology.hpp"
#include "vth/morse.hpp"
#include "printers.hpp"

using namespace vth;

namespace {

std::vector<std::vector<Vertex>> edge_parts(const Graph& g) {
  std::vector<std::vector<Vertex>> parts;
  for (const auto& [u, v] : g.edges()) parts.push_back({u, v});
  return parts;
}

std::size_t total(const std::vector<std::vector<Simplex>>& layers) {
  std::size_t t = 0;
  for (const auto& l : layers) t += l.size();
  return t;
}

SimplicialComplex full_simplex(std::vector<Vertex> vs) { return SimplicialComplex::from_facets({make_simplex(vs)}); }

}  // namespace

TEST(NeighbourhoodMatching, FiveCycle) {
  const auto c5 = cycle_graph(5);
  const auto n = closed_neighbourhood_complex(c5);
  EXPECT_EQ(n.face_counts(), (std::vector<std::size_t>{5, 10, 5}));
  const auto d = verify_cluster(c5, edge_parts(c5));
  const auto m = neighbourhood_matching(c5, d);
  EXPECT_EQ(m.pairs.size(), 5u);
  EXPECT_TRUE(is_acyclic_matching(n, m));
  const auto crit = critical_faces(n, m);
  EXPECT_EQ(total(crit), 10u);
  const auto collapsed = collapse_critical(n, m);
  EXPECT_EQ(collapsed, SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
  EXPECT_EQ(homology(collapsed), homology(n));
}

TEST(NeighbourhoodMatching, LongerCyclesCollapseOntoTheCycle) {
  for (int len = 5; len <= 9; ++len) {
    const auto c = cycle_graph(len);
    const auto n = closed_neighbourhood_complex(c);
    const auto m = neighbourhood_matching(c, verify_cluster(c, edge_parts(c)));
    EXPECT_EQ(one_skeleton(collapse_critical(n, m)), c) << len;
  }
}

TEST(Matching, EmptyKeepsEverything) {
  const auto k = rp2_six_vertex();
  const AcyclicMatching none;
  EXPECT_TRUE(is_acyclic_matching(k, none));
  EXPECT_EQ(total(critical_faces(k, none)), 31u);
  EXPECT_EQ(collapse_critical(k, none), k);
}

TEST(Matching, StarCollapsesSimplexOntoWedge) {
  const std::vector<std::vector<Vertex>> blocks{{1, 2}, {3}};
  const auto m = star_matching(0, blocks);
  const auto k = full_simplex({0, 1, 2, 3});
  EXPECT_TRUE(is_acyclic_matching(k, m));
  EXPECT_EQ(m.pairs.size(), 3u);
  EXPECT_EQ(collapse_critical(k, m), SimplicialComplex::from_facets({{0, 1, 2}, {0, 3}}));
}

TEST(Matching, StarPreservesEulerCharacteristic) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    // Split 1..n into random nonempty blocks.
    const int n = 2 + trial % 6;
    std::vector<std::vector<Vertex>> blocks(1);
    for (Vertex v = 1; v <= n; ++v) {
      if (!blocks.back().empty() && rng() % 2) blocks.emplace_back();
      blocks.back().push_back(v);
    }
    std::vector<Vertex> all{0};
    for (Vertex v = 1; v <= n; ++v) all.push_back(v);
    const auto k = full_simplex(all);
    const auto m = star_matching(0, blocks);
    ASSERT_TRUE(is_acyclic_matching(k, m));
    const auto crit = critical_faces(k, m);
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < crit.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(crit[i].size());
    EXPECT_EQ(chi, 1);
    const auto wedge = collapse_critical(k, m);
    EXPECT_EQ(wedge.facets().size(), blocks.size());
  }
}

TEST(Matching, GradientCycleIsRejected) {
  const auto k = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
  AcyclicMatching m;
  m.pairs = {{{0}, {0, 1}}, {{1}, {1, 2}}, {{2}, {0, 2}}};
  EXPECT_FALSE(is_acyclic_matching(k, m));
  EXPECT_THROW(collapse_critical(k, m), VerificationError);
  m.pairs.pop_back();
  EXPECT_TRUE(is_acyclic_matching(k, m));
}

TEST(Matching, MalformedPairsAreRejected) {
  const auto k = full_simplex({0, 1, 2});
  AcyclicMatching skip;
  skip.pairs = {{{0}, {0, 1, 2}}};
  EXPECT_FALSE(is_acyclic_matching(k, skip));
  AcyclicMatching reuse;
  reuse.pairs = {{{0}, {0, 1}}, {{0}, {0, 2}}};
  EXPECT_FALSE(is_acyclic_matching(k, reuse));
  AcyclicMatching outside;
  outside.pairs = {{{0}, {0, 7}}};
  EXPECT_FALSE(is_acyclic_matching(k, outside));
}

TEST(Matching, CriticalFacesMustFormSubcomplex) {
  // Pairing {0} with {0,1} leaves {0,2} critical without its vertex {0}.
  const auto k = SimplicialComplex::from_facets({{0, 1}, {0, 2}});
  AcyclicMatching m;
  m.pairs = {{{0}, {0, 1}}};
  ASSERT_TRUE(is_acyclic_matching(k, m));
  EXPECT_THROW(collapse_critical(k, m), VerificationError);
}
