#pragma once

#include <span>
#include <utility>
#include <vector>

#include "vth/cluster.hpp"
#include "vth/simplicial.hpp"

namespace vth {

/// Pairs (sigma, tau) with tau = sigma + one vertex, no face used twice.
struct AcyclicMatching {
  std::vector<std::pair<Simplex, Simplex>> pairs;
};

/// True if `m` is a matching on the faces of `k` (codimension-one pairs, no
/// face repeated) and the Hasse diagram with matched edges reversed has no
/// directed cycle.
bool is_acyclic_matching(const SimplicialComplex& k, const AcyclicMatching& m,
                         std::size_t face_cap = SimplicialComplex::default_face_cap());

/// Faces of `k` not used by `m`, grouped by dimension.
std::vector<std::vector<Simplex>> critical_faces(const SimplicialComplex& k, const AcyclicMatching& m,
                                                 std::size_t face_cap = SimplicialComplex::default_face_cap());

/// Matching on the closed neighbourhood complex N[G] collapsing every face
/// that spans more than one part: a face sigma outside all parts lies in
/// N[v] for exactly one v, and sigma - {v} is paired with sigma + {v}.
///
/// Throws VerificationError if some spanning face has several such v, if a
/// face of size >= 2 inside a part is dominated from outside that part, or
/// if the result is not acyclic.
AcyclicMatching neighbourhood_matching(const Graph& g, const ClusterDecomposition& d,
                                       std::size_t face_cap = SimplicialComplex::default_face_cap());

/// Subcomplex of critical faces. Throws VerificationError if the matching is
/// not acyclic or the critical faces are not closed under taking faces.
SimplicialComplex collapse_critical(const SimplicialComplex& k, const AcyclicMatching& m,
                                    std::size_t face_cap = SimplicialComplex::default_face_cap());

/// Matching on the full simplex over {apex} + blocks pairing sigma with
/// sigma + {apex} whenever sigma meets two blocks. Collapses onto the wedge of
/// the simplices {apex} + block.
AcyclicMatching star_matching(Vertex apex, std::span<const std::vector<Vertex>> blocks);

}  // namespace vth
