#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vth/groups.hpp"
#include "vth/simplicial.hpp"

namespace vth {

/// Marks 0 <= a_1 < ... < a_d with pairwise distinct differences.
struct GolombRuler {
  std::vector<std::int64_t> marks;
  std::int64_t length() const { return marks.empty() ? 0 : marks.back(); }
  friend bool operator==(const GolombRuler&, const GolombRuler&) = default;
};

/// Two mark pairs (i < j), (k < l) with a_j - a_i == a_l - a_k.
struct RepeatedDifference {
  std::size_t i, j, k, l;
  std::int64_t difference;
};

/// nullopt if the marks form a Golomb ruler, else the first repeated
/// difference. Throws std::invalid_argument on non-increasing or negative input.
std::optional<RepeatedDifference> golomb_violation(std::span<const std::int64_t> marks);
bool is_golomb(std::span<const std::int64_t> marks);

/// Start at 0 and append the least integer keeping all differences distinct.
GolombRuler greedy_golomb(int d);

/// Least n > 2 a_d coprime to every difference of the ruler.
std::int64_t choose_modulus(const GolombRuler& ruler);

/// First d positive integers of the form 1 + (number with base-3 digits in {0,1}).
std::vector<std::int64_t> progression_free(int d);

/// A host complex or graph together with the vertex sets of its canonical parts.
struct PartedComplex {
  SimplicialComplex complex;
  std::vector<std::vector<Vertex>> parts;
};
struct PartedGraph {
  Graph graph;
  std::vector<std::vector<Vertex>> parts;
};

/// Complex on Z/n whose faces are translates {x + a_i : v_i in sigma} of the
/// faces of `k`, with parts {x + a_i}. Vertex v_i is the i-th smallest vertex
/// of `k`. Throws std::invalid_argument if the ruler has the wrong size or is
/// not Golomb, n <= 2 a_d, n shares a factor with a difference, or `k` is
/// disconnected.
PartedComplex cyclic_extension(const SimplicialComplex& k, const GolombRuler& ruler, std::int64_t n);

/// Graph on all elements of the pair's group (vertex = element index) with
/// edges {g g_i, g g_j} for every edge v_i v_j of `h`; parts {g g_i}. Vertex
/// v_i is the i-th smallest vertex of `h`. Part i of the output belongs to the
/// element with index i.
PartedGraph group_extension_graph(const Graph& h, const GroupPair& pair);

/// Connection set {g_i^-1 g_j : v_i v_j in E(h)} of the extension graph.
std::vector<Element> extension_connection_set(const Graph& h, const GroupPair& pair);

/// Facets are the maximal cliques, found by pivoting Bron-Kerbosch.
SimplicialComplex clique_complex(const Graph& g);

/// Facets are the maximal open (resp. closed) neighbourhoods. Both reject a
/// disconnected graph with std::invalid_argument.
SimplicialComplex open_neighbourhood_complex(const Graph& g);
SimplicialComplex closed_neighbourhood_complex(const Graph& g);

/// r-th power of the n-cycle; needs n >= 2r + 1.
Graph power_cycle(int n, int r);

/// Complex on Z/(4k+2) generated by the translates of {0, 1, 2, 4, 2k+4}.
SimplicialComplex k_family_complex(int k);

/// Cycle graph C_n on 0..n-1.
Graph cycle_graph(int n);

/// Standard 6-vertex triangulation of the real projective plane on 0..5.
SimplicialComplex rp2_six_vertex();

}  // namespace vth
