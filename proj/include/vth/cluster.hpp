#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vth/simplicial.hpp"

namespace vth {

/// Shape statistics of a cluster: enough to determine the wedge-circle count.
struct ShapeSummary {
  std::size_t k = 0;                             ///< number of parts
  std::map<Vertex, std::size_t> shared_vertices;  ///< vertex -> #parts containing it, only when >= 2
  std::size_t incidence_edge_count = 0;          ///< sum of multiplicities of shared vertices
  std::size_t component_count = 0;               ///< components of the reduced incidence graph
  friend bool operator==(const ShapeSummary&, const ShapeSummary&) = default;
};

/// A host complex or graph together with parts whose induced subobjects
/// cover it and pairwise meet in at most one vertex.
struct ClusterDecomposition {
  std::variant<SimplicialComplex, Graph> host;
  std::vector<std::vector<Vertex>> parts;  ///< sorted vertex sets; the shape's hyperedges
  ShapeSummary summary;

  std::vector<Vertex> host_vertices() const;
};

/// Outcome of a cluster check. `decomposition` is set iff `valid`.
struct ClusterCheck {
  bool valid = false;
  std::vector<std::string> violations;
  std::optional<ClusterDecomposition> decomposition;
};

ClusterCheck check_cluster(const SimplicialComplex& host, std::span<const std::vector<Vertex>> parts);
ClusterCheck check_cluster(const Graph& host, std::span<const std::vector<Vertex>> parts);

/// As check_cluster, but throws VerificationError listing the violations.
ClusterDecomposition verify_cluster(const SimplicialComplex& host, std::span<const std::vector<Vertex>> parts);
ClusterDecomposition verify_cluster(const Graph& host, std::span<const std::vector<Vertex>> parts);

ShapeSummary shape_summary(std::span<const std::vector<Vertex>> parts);

/// Length of the shortest alternating vertex/part cycle with distinct vertices
/// and distinct parts; nullopt when there is none.
std::optional<std::size_t> cluster_girth(std::span<const std::vector<Vertex>> parts);
inline std::optional<std::size_t> cluster_girth(const ClusterDecomposition& d) { return cluster_girth(d.parts); }

/// First Betti number E - V + C of the reduced incidence graph (parts plus
/// shared vertices). Throws std::invalid_argument if the host or a part is
/// disconnected.
std::size_t wedge_circle_count(const ClusterDecomposition& d);
/// Same count from the summary alone.
std::size_t wedge_circle_count(const ShapeSummary& s);

}  // namespace vth
