#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vth/cluster.hpp"
#include "vth/groups.hpp"
#include "vth/homology.hpp"
#include "vth/simplicial.hpp"
#include "vth/transitivity.hpp"

namespace vth::io {

using nlohmann::json;

/// Maps internal vertex ids back to the labels of a JSON file.
///
/// When every input label is an integer the ids are the labels themselves and
/// `names` stays empty. Otherwise id i is the i-th label in input order.
struct VertexLabels {
  std::vector<json> names;

  bool identity() const { return names.empty(); }
  json name(Vertex v) const;
  /// Throws std::invalid_argument for an unknown label.
  Vertex id(const json& label) const;
};

struct ComplexFile {
  SimplicialComplex complex;
  VertexLabels labels;
};
struct GraphFile {
  Graph graph;
  VertexLabels labels;
};

/// {"vertices": [...], "facets": [[...], ...]}. Facet entries must be listed
/// vertices. Throws std::invalid_argument on malformed input.
ComplexFile read_complex(const json& j);
json write_complex(const SimplicialComplex& k, const VertexLabels& labels = {});

/// {"vertices": [...], "edges": [[u, v], ...]}.
GraphFile read_graph(const json& j);
json write_graph(const Graph& g, const VertexLabels& labels = {});

/// {"H": [{"betti": b, "torsion": [...]}, ...]}.
json write_profile(const HomologyProfile& p);
HomologyProfile read_profile(const json& j);

/// {"valid", "k", "cluster_girth": int | "inf", "l", "violations"}. Girth and
/// l are null when the check failed.
json cluster_report(const ClusterCheck& check);

/// {"generators": {label: [image of each vertex]}}, images listed in the
/// order write_complex emits the vertices (ascending ids), read against the
/// labels of the complex the action is on.
GroupAction read_action(const json& j, const std::vector<Vertex>& domain, const VertexLabels& labels);
json write_action(const GroupAction& a, const VertexLabels& labels = {});

/// {"group": "prod:sym:4,cyclic:21", "D": ["([2,1,3,4],1)", ...]}.
GroupPair read_pair(const json& j);
json write_pair(const GroupPair& pair);

json load_file(const std::string& path);
/// Two-space indentation and a trailing newline.
std::string dump(const json& j);

}  // namespace vth::io
