#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vth {

/// Vertex label. Complexes built from groups use the element's enumeration
/// index; JSON labels that are not integers are mapped to ids by the io layer.
using Vertex = std::int64_t;

/// Strictly increasing list of vertices.
using Simplex = std::vector<Vertex>;

/// Sorts and deduplicates in place, returning the result.
Simplex make_simplex(std::vector<Vertex> vertices);

/// True if every vertex of `small` occurs in `large` (both sorted).
bool is_subset(std::span<const Vertex> small, std::span<const Vertex> large);

/// Finite abstract simplicial complex stored by its facets.
///
/// Facets are kept sorted lexicographically and form an antichain under
/// inclusion. Isolated vertices are 0-dimensional facets. Values are
/// immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Inclusion-maximal members of `candidate_faces`. Empty candidates are
  /// ignored.
  static SimplicialComplex from_facets(std::vector<Simplex> candidate_faces);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Simplex>& facets() const { return facets_; }

  bool empty() const { return facets_.empty(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  /// -1 for the empty complex.
  int dimension() const;

  bool contains_vertex(Vertex v) const;
  /// Face membership (downward closed). The empty simplex is a face of
  /// every complex.
  bool contains_face(std::span<const Vertex> face) const;

  /// All nonempty faces, grouped by dimension, each group sorted.
  /// Throws CapExceeded if more than `cap` faces would be produced.
  std::vector<std::vector<Simplex>> faces(std::size_t cap = default_face_cap()) const;
  /// Number of nonempty faces per dimension.
  std::vector<std::size_t> face_counts(std::size_t cap = default_face_cap()) const;

  /// 2^20 unless the THCAP_FACES environment variable says otherwise.
  static std::size_t default_face_cap();

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Simplex> facets_;
};

/// Finite simple undirected graph.
class Graph {
 public:
  Graph() = default;
  /// Loops are rejected; duplicate edges collapse. Endpoints are added to the
  /// vertex set if missing.
  Graph(std::vector<Vertex> vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool contains_vertex(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  /// Sorted open neighbourhood. Throws on unknown vertex.
  const std::vector<Vertex>& neighbours(Vertex v) const;
  /// Position of `v` in vertices(); throws on unknown vertex.
  std::size_t position(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Subcomplex of faces of `k` contained in `subset`. Throws
/// std::invalid_argument if `subset` mentions an unknown vertex.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> subset);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// Image of `k` under the vertex map `old -> map(old)`; the map is given as
/// parallel sorted-by-source arrays.
SimplicialComplex relabel(const SimplicialComplex& k, std::span<const Vertex> from,
                          std::span<const Vertex> to);

Graph one_skeleton(const SimplicialComplex& k);

/// Vertex i of the result corresponds to `barycentric_vertices(k)[i]`.
Graph barycentric_1skeleton(const SimplicialComplex& k);
/// Nonempty faces of `k` ordered by dimension, then lexicographically.
std::vector<Simplex> barycentric_vertices(const SimplicialComplex& k);

/// Join with K2's vertices shifted past max(V(K1)). Joining with the empty
/// complex returns the other operand unchanged.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);
/// t-fold join of `k` with itself; t = 0 gives the empty complex.
SimplicialComplex t_fold_join(const SimplicialComplex& k, int t);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
/// Components of the 1-skeleton.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k);

bool is_connected(const Graph& g);
bool is_connected(const SimplicialComplex& k);

/// Euler characteristic from face counts.
std::int64_t euler_characteristic(const SimplicialComplex& k);

}  // namespace vth
