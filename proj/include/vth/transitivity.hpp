#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vth/groups.hpp"
#include "vth/homology.hpp"
#include "vth/simplicial.hpp"

namespace vth {

/// A finite group acting on a vertex set, stored as one vertex permutation
/// per group element (or per generator, when built from generators).
///
/// images[g][i] is the image of domain[i] under element g.
struct GroupAction {
  std::vector<Vertex> domain;
  std::vector<std::vector<Vertex>> images;
  std::vector<std::string> labels;  ///< one per entry of `images`

  /// Tabulates `act` on every element of `group`. Throws std::invalid_argument
  /// if some image leaves `domain`.
  static GroupAction from_group(const FiniteGroup& group, std::vector<Vertex> domain,
                                const std::function<Vertex(const Element&, Vertex)>& act);
  /// Permutations given directly, e.g. one per generator.
  static GroupAction from_permutations(std::vector<Vertex> domain, std::vector<std::vector<Vertex>> images,
                                       std::vector<std::string> labels = {});

  Vertex apply(std::size_t element, Vertex v) const;
};

/// Z/n acting on 0..n-1 by x -> x + g.
GroupAction translation_action(std::int64_t n);
/// Left multiplication of the subgroup's elements on the subgroup's element
/// indices (the vertex ids used by group-derived graphs).
GroupAction left_multiplication_action(const Subgroup& h);
/// Only the listed elements (typically generators of h) acting by left
/// multiplication. Orbits are the same as for h when they generate it.
GroupAction left_multiplication_action(const Subgroup& h, std::span<const Element> by);

/// act(e, v) = v and act(gh, v) = act(g, act(h, v)) on all pairs.
bool satisfies_action_laws(const FiniteGroup& group, const GroupAction& action);

/// Every listed element maps every facet onto a face. Throws
/// std::invalid_argument if the action's domain is not the vertex set.
bool verify_simplicial_action(const SimplicialComplex& k, const GroupAction& action);
bool verify_graph_action(const Graph& g, const GroupAction& action);

/// Orbit of the first vertex (facet) under the listed elements, iterated to
/// closure, covers every vertex (facet).
bool is_vertex_transitive(const SimplicialComplex& k, const GroupAction& action);
bool is_vertex_transitive(const Graph& g, const GroupAction& action);
bool is_facet_transitive(const SimplicialComplex& k, const GroupAction& action);

enum class LefschetzVerdict { obstructed, not_applicable };

/// `obstructed` iff the profile is not that of a point, every rational Betti
/// number is at most 1 and the Euler characteristic is odd. Torsion is only
/// consulted to tell the profile apart from a point's.
LefschetzVerdict lefschetz_obstruction(const HomologyProfile& profile);

std::string to_string(LefschetzVerdict v);

}  // namespace vth
