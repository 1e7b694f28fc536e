#include <gtest/gtest.h>

#include "vth/constructions.hpp"
#include "vth/errors.hpp"
#include "vth/pipeline.hpp"
#include "vth/transitivity.hpp"
#include "printers.hpp"

using namespace vth;

namespace {

const SimplicialComplex& edge() {
  static const auto k = SimplicialComplex::from_facets({{0, 1}});
  return k;
}

void expect_all_checks_pass(const PipelineReport& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.pass());
}

const HomologyProfile& computed(const PipelineReport& r, const std::string& name) {
  for (const auto& [n, p] : r.computed)
    if (n == name) return p;
  throw std::out_of_range(name);
}

nlohmann::json without_clock(const PipelineReport& r) {
  auto j = r.to_json();
  j.erase("wall_seconds");
  return j;
}

}  // namespace

TEST(CyclicPipeline, Edge) {
  const auto r = pipeline_cyclic(edge());
  expect_all_checks_pass(r);
  EXPECT_EQ(r.n, 3);
  EXPECT_EQ(r.l, 1);
  EXPECT_EQ(r.predicted, (HomologyProfile{{{1, {}}, {1, {}}}}));
}

TEST(CyclicPipeline, TriangleBoundary) {
  const auto r = pipeline_cyclic(SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}}));
  expect_all_checks_pass(r);
  EXPECT_EQ(r.n, 7);
  EXPECT_EQ(r.l, 8);
  EXPECT_EQ(r.predicted[1].betti, 15);
}

TEST(CyclicPipeline, ProjectivePlane) {
  const auto r = pipeline_cyclic(rp2_six_vertex());
  expect_all_checks_pass(r);
  EXPECT_EQ(r.n, 41);
  EXPECT_EQ(r.l, 165);
  ASSERT_EQ(r.computed.size(), 1u);
  const auto& h = r.computed.front().second;
  EXPECT_EQ(h[1].betti, 165);
  EXPECT_EQ(h[1].torsion, std::vector<std::int64_t>(41, 2));
  EXPECT_TRUE(h[2].is_zero());
  EXPECT_EQ(lefschetz_obstruction(h), LefschetzVerdict::not_applicable);
}

TEST(CyclicPipeline, RejectsDisconnectedInput) {
  EXPECT_THROW(pipeline_cyclic(SimplicialComplex::from_facets({{0}, {1}})), std::invalid_argument);
  EXPECT_THROW(pipeline_cyclic(SimplicialComplex{}), std::invalid_argument);
}

TEST(CyclicPipeline, ReportIsDeterministic) {
  const auto k = SimplicialComplex::from_facets({{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(without_clock(pipeline_cyclic(k)), without_clock(pipeline_cyclic(k)));
}

TEST(CayleyPipeline, EdgeWithBothMarkSets) {
  for (const std::vector<std::int64_t>& marks : {std::vector<std::int64_t>{1, 2, 4}, std::vector<std::int64_t>{1, 2, 5}}) {
    CayleyOptions opts;
    opts.marks = marks;
    const auto r = pipeline_cayley(edge(), opts);
    expect_all_checks_pass(r);
    const int m = static_cast<int>(4 * marks.back() + 1);
    EXPECT_EQ(r.n, 12 * m);
    EXPECT_EQ(r.l, 12 * m + 1);
    ASSERT_TRUE(r.cluster_girth.has_value());
    EXPECT_GE(*r.cluster_girth, 5u);
    EXPECT_EQ(computed(r, "Cl(G)"), computed(r, "N[G]"));
    EXPECT_EQ(computed(r, "N[G]"), r.predicted);
  }
}

TEST(CayleyPipeline, CliqueModeOnly) {
  CayleyOptions opts;
  opts.mode = CayleyMode::clique;
  const auto r = pipeline_cayley(edge(), opts);
  expect_all_checks_pass(r);
  EXPECT_EQ(r.computed.size(), 1u);
  EXPECT_EQ(r.check("morse_collapse"), nullptr);
}

TEST(CayleyPipeline, RefusesPastElementCap) {
  const auto path = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
  EXPECT_THROW(pipeline_cayley(path), CapExceeded);
}

TEST(CayleyPipeline, RejectsInvalidMarks) {
  CayleyOptions opts;
  opts.marks = {1, 2, 3};
  EXPECT_THROW(pipeline_cayley(edge(), opts), std::invalid_argument);
}
