#include <gtest/gtest.h>

#include "vth/constructions.hpp"
#include "vth/groups.hpp"
#include "vth/homology.hpp"
#include "vth/transitivity.hpp"
#include "printers.hpp"

using namespace vth;

namespace {

HomologyProfile profile(std::vector<HomologyGroup> g) { return HomologyProfile{std::move(g)}; }

SimplicialComplex graph_complex(const Graph& g) {
  std::vector<Simplex> facets;
  for (const auto& [u, v] : g.edges()) facets.push_back({u, v});
  return SimplicialComplex::from_facets(facets);
}

// Edges {x, x+1} and the triangles {x, x+2, x+4} on Z/6.
SimplicialComplex mixed_hexagon() {
  std::vector<Simplex> facets{{0, 2, 4}, {1, 3, 5}};
  for (int x = 0; x < 6; ++x) facets.push_back(make_simplex({x, (x + 1) % 6}));
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST(Action, TranslationSatisfiesLaws) {
  for (int n = 1; n <= 7; ++n) EXPECT_TRUE(satisfies_action_laws(FiniteGroup::cyclic(n), translation_action(n)));
}

TEST(Action, LeftMultiplicationSatisfiesLaws) {
  const auto s3 = FiniteGroup::symmetric(3);
  const auto all = s3.elements();
  const auto h = generated_subgroup(s3, all);
  EXPECT_TRUE(satisfies_action_laws(s3, left_multiplication_action(h)));
}

TEST(Action, RightMultiplicationBreaksLaws) {
  const auto s3 = FiniteGroup::symmetric(3);
  std::vector<Vertex> domain{0, 1, 2, 3, 4, 5};
  const auto bad = GroupAction::from_group(
      s3, domain, [&](const Element& g, Vertex v) { return s3.index(s3.multiply(s3.element_at(v), g)); });
  EXPECT_FALSE(satisfies_action_laws(s3, bad));
}

TEST(Action, ForeignImagesAreRejected) {
  std::vector<Vertex> domain{0, 1, 2};
  EXPECT_THROW(GroupAction::from_group(FiniteGroup::cyclic(3), domain,
                                       [](const Element& g, Vertex v) { return v + g.coords[0]; }),
               std::invalid_argument);
}

TEST(Action, PathIsNotInvariantUnderRotation) {
  const auto p3 = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
  EXPECT_FALSE(verify_simplicial_action(p3, translation_action(3)));
  const auto c3 = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(verify_simplicial_action(c3, translation_action(3)));
  EXPECT_THROW(verify_simplicial_action(p3, translation_action(4)), std::invalid_argument);
}

TEST(Action, CayleyGraphAndLeftMultiplication) {
  const auto s3 = FiniteGroup::symmetric(3);
  const std::vector<Element> s{transposition_one(3, 2), transposition_one(3, 3)};
  const auto g = cayley_graph(s3, s);
  const auto h = generated_subgroup(s3, s3.elements());
  EXPECT_TRUE(verify_graph_action(g, left_multiplication_action(h)));
  EXPECT_TRUE(is_vertex_transitive(g, left_multiplication_action(h, s)));
}

TEST(Transitivity, CycleComplexes) {
  const auto c5 = cycle_graph(5);
  const auto t = translation_action(5);
  const auto closed = closed_neighbourhood_complex(c5);
  ASSERT_TRUE(verify_simplicial_action(closed, t));
  EXPECT_TRUE(is_vertex_transitive(closed, t));
  EXPECT_TRUE(is_facet_transitive(closed, t));
  const auto clique = clique_complex(c5);
  EXPECT_TRUE(is_facet_transitive(clique, t));
  EXPECT_TRUE(is_vertex_transitive(c5, t));
}

TEST(Transitivity, VertexButNotFacetTransitive) {
  const auto k = mixed_hexagon();
  const auto t = translation_action(6);
  ASSERT_TRUE(verify_simplicial_action(k, t));
  EXPECT_TRUE(is_vertex_transitive(k, t));
  EXPECT_FALSE(is_facet_transitive(k, t));
}

TEST(Transitivity, DisjointUnionUnderSubgroup) {
  // Two triangles {0,2,4}, {1,3,5} under translation by 2 only.
  const auto k = SimplicialComplex::from_facets({{0, 2, 4}, {1, 3, 5}});
  std::vector<Vertex> domain{0, 1, 2, 3, 4, 5};
  const auto by_two = GroupAction::from_permutations(domain, {{2, 3, 4, 5, 0, 1}});
  ASSERT_TRUE(verify_simplicial_action(k, by_two));
  EXPECT_FALSE(is_vertex_transitive(k, by_two));
  EXPECT_FALSE(is_facet_transitive(k, by_two));
  EXPECT_TRUE(is_vertex_transitive(k, translation_action(6)));
  EXPECT_TRUE(is_facet_transitive(k, translation_action(6)));
}

TEST(Transitivity, GraphOfEdgesOnly) {
  const auto c7 = cycle_graph(7);
  EXPECT_TRUE(is_facet_transitive(graph_complex(c7), translation_action(7)));
}

TEST(Lefschetz, Examples) {
  const auto rp2 = profile({{1, {}}, {0, {2}}, {0, {}}});
  const auto s2_wedge_s1 = profile({{1, {}}, {1, {}}, {1, {}}});
  const auto torus = profile({{1, {}}, {2, {}}, {1, {}}});
  const auto point = profile({{1, {}}});
  const auto s2 = profile({{1, {}}, {0, {}}, {1, {}}});
  EXPECT_EQ(lefschetz_obstruction(rp2), LefschetzVerdict::obstructed);
  EXPECT_EQ(lefschetz_obstruction(s2_wedge_s1), LefschetzVerdict::obstructed);
  EXPECT_EQ(lefschetz_obstruction(torus), LefschetzVerdict::not_applicable);
  EXPECT_EQ(lefschetz_obstruction(point), LefschetzVerdict::not_applicable);
  EXPECT_EQ(lefschetz_obstruction(s2), LefschetzVerdict::not_applicable);
  EXPECT_EQ(lefschetz_obstruction(homology(rp2_six_vertex())), LefschetzVerdict::obstructed);
}

TEST(Lefschetz, TorsionDoesNotMatterAwayFromPoint) {
  const std::vector<HomologyProfile> bases{
      profile({{1, {}}, {1, {}}, {1, {}}}), profile({{1, {}}, {2, {}}, {1, {}}}), profile({{2, {}}}),
      profile({{1, {}}, {0, {}}, {1, {}}}), profile({{1, {}}, {1, {}}})};
  for (const auto& base : bases) {
    const auto verdict = lefschetz_obstruction(base);
    for (std::int64_t t : {2, 3, 12}) {
      auto perturbed = base;
      if (perturbed.groups.size() < 2) perturbed.groups.resize(2);
      perturbed.groups[1].torsion.push_back(t);
      EXPECT_EQ(lefschetz_obstruction(perturbed), verdict) << base.to_tuple_string() << " + Z/" << t;
    }
  }
}

TEST(Lefschetz, Strings) {
  EXPECT_EQ(to_string(LefschetzVerdict::obstructed), "obstructed");
  EXPECT_EQ(to_string(LefschetzVerdict::not_applicable), "not_applicable");
}
