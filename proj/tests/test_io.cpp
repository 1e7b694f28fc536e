#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vth/constructions.hpp"
#include "vth/io.hpp"
#include "printers.hpp"

using namespace vth;
using vth::io::json;

namespace {

std::string data(const std::string& name) { return std::string(VTH_DATA_DIR) + "/" + name; }

std::string roundtrip_complex(const std::string& text) {
  const auto f = io::read_complex(json::parse(text));
  return io::dump(io::write_complex(f.complex, f.labels));
}

}  // namespace

TEST(ComplexIO, IntegerLabelsRoundTripByteForByte) {
  for (const char* name : {"edge.json", "boundary_triangle.json", "rp2.json"}) {
    const auto once = roundtrip_complex(io::load_file(data(name)).dump());
    EXPECT_EQ(roundtrip_complex(once), once) << name;
    const auto f = io::read_complex(io::load_file(data(name)));
    EXPECT_TRUE(f.labels.identity());
  }
}

TEST(ComplexIO, StringLabelsKeepInputOrder) {
  const auto f = io::read_complex(io::load_file(data("path2.json")));
  ASSERT_FALSE(f.labels.identity());
  EXPECT_EQ(f.complex.facets(), (std::vector<Simplex>{{0, 1}, {1, 2}}));
  EXPECT_EQ(f.labels.name(2), json("c"));
  EXPECT_EQ(f.labels.id(json("b")), 1);
  EXPECT_THROW(f.labels.id(json("z")), std::invalid_argument);
  const auto text = io::dump(io::write_complex(f.complex, f.labels));
  EXPECT_EQ(roundtrip_complex(text), text);
  EXPECT_EQ(json::parse(text)["facets"], json::parse(R"([["a","b"],["b","c"]])"));
}

TEST(ComplexIO, RandomComplexesRoundTrip) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto raw = oracle::random_facets(rng, 9, 6, 4);
    const auto k = SimplicialComplex::from_facets(std::vector<Simplex>(raw.begin(), raw.end()));
    const auto back = io::read_complex(io::write_complex(k));
    EXPECT_EQ(back.complex, k);
  }
}

TEST(ComplexIO, MalformedInputIsRejected) {
  EXPECT_THROW(io::read_complex(json::parse(R"({"vertices":[1,2]})")), std::invalid_argument);
  EXPECT_THROW(io::read_complex(json::parse(R"({"vertices":[1,2],"facets":[[1,3]]})")), std::invalid_argument);
  EXPECT_THROW(io::read_complex(json::parse(R"([1,2])")), std::invalid_argument);
}

TEST(GraphIO, RoundTrip) {
  const auto c5 = cycle_graph(5);
  const auto j = io::write_graph(c5);
  const auto back = io::read_graph(j);
  EXPECT_EQ(back.graph, c5);
  EXPECT_EQ(io::dump(io::write_graph(back.graph, back.labels)), io::dump(j));
}

TEST(ProfileIO, RoundTrip) {
  const HomologyProfile p{{{1, {}}, {165, std::vector<std::int64_t>(41, 2)}, {0, {}}}};
  const auto j = io::write_profile(p);
  EXPECT_EQ(j["H"][1]["betti"], 165);
  EXPECT_EQ(io::read_profile(j), p);
  EXPECT_EQ(io::dump(io::write_profile(io::read_profile(j))), io::dump(j));
}

TEST(ActionIO, RoundTrip) {
  const auto a = translation_action(5);
  const auto j = io::write_action(a);
  const auto back = io::read_action(j, a.domain, {});
  EXPECT_EQ(back.domain, a.domain);
  for (std::size_t g = 0; g < a.images.size(); ++g) {
    const auto it = std::find(back.labels.begin(), back.labels.end(), a.labels[g]);
    ASSERT_NE(it, back.labels.end());
    EXPECT_EQ(back.images[static_cast<std::size_t>(it - back.labels.begin())], a.images[g]);
  }
  EXPECT_EQ(io::dump(io::write_action(back)), io::dump(j));
}

TEST(ActionIO, StringLabels) {
  const auto f = io::read_complex(io::load_file(data("path2.json")));
  const auto j = json::parse(R"({"generators":{"flip":["c","b","a"]}})");
  const auto a = io::read_action(j, f.complex.vertices(), f.labels);
  EXPECT_EQ(a.images.front(), (std::vector<Vertex>{2, 1, 0}));
  EXPECT_TRUE(verify_simplicial_action(f.complex, a));
  EXPECT_EQ(io::write_action(a, f.labels), j);
}

TEST(PairIO, RoundTrip) {
  const auto pair = io::read_pair(io::load_file(data("gamma3_pair.json")));
  EXPECT_EQ(pair.group().order(), 24 * 21);
  EXPECT_EQ(pair.size(), 3u);
  const std::vector<std::int64_t> a{1, 2, 5};
  const auto built = gamma_d_pair(a, 21);
  EXPECT_EQ(pair.distinguished(), built.distinguished());
  EXPECT_EQ(io::write_pair(pair), io::load_file(data("gamma3_pair.json")));
  EXPECT_THROW(io::read_pair(json::parse(R"({"group":"cyclic:5","D":["7"]})")), std::invalid_argument);
}

TEST(ClusterReport, Fields) {
  const auto c5 = cycle_graph(5);
  std::vector<std::vector<Vertex>> parts;
  for (const auto& [u, v] : c5.edges()) parts.push_back({u, v});
  const auto ok = io::cluster_report(check_cluster(c5, parts));
  EXPECT_EQ(ok["valid"], true);
  EXPECT_EQ(ok["k"], 5);
  EXPECT_EQ(ok["cluster_girth"], 5);
  EXPECT_EQ(ok["l"], 1);
  const std::vector<std::vector<Vertex>> tree{{0, 1}, {1, 2}};
  const auto path = SimplicialComplex::from_facets({{0, 1}, {1, 2}});
  EXPECT_EQ(io::cluster_report(check_cluster(path, tree))["cluster_girth"], "inf");
  parts.pop_back();
  const auto bad = io::cluster_report(check_cluster(c5, parts));
  EXPECT_EQ(bad["valid"], false);
  EXPECT_TRUE(bad["l"].is_null());
  EXPECT_FALSE(bad["violations"].empty());
}
