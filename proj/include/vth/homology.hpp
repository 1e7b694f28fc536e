#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "vth/simplicial.hpp"

namespace vth {

/// Sparse integer matrix stored by columns; each column is sorted by row.
class IntegerMatrix {
 public:
  using Entry = std::pair<std::size_t, std::int64_t>;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  static IntegerMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  std::int64_t at(std::size_t r, std::size_t c) const;
  /// Overwrites (or erases, for zero) one entry.
  void set(std::size_t r, std::size_t c, std::int64_t value);
  std::size_t nonzeros() const;

  /// Exact product; throws std::overflow_error if an entry leaves int64.
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  bool is_zero() const { return nonzeros() == 0; }

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// Invariant factors d_1 | d_2 | ... | d_rank of a matrix over the integers.
/// Leading units are counted rather than stored.
struct SmithForm {
  std::size_t rank = 0;
  std::size_t unit_factors = 0;
  std::vector<mpz_class> nontrivial;  ///< factors > 1, each dividing the next

  std::vector<mpz_class> invariant_factors() const;
};

/// Exact Smith normal form. Sparse elimination on unit pivots first, then a
/// dense pass on the remainder choosing the entry of least absolute value.
/// Runs in int64 and restarts in GMP integers if an entry would overflow.
SmithForm smith_normal_form(const IntegerMatrix& m);
/// Same, never leaving GMP integers.
SmithForm smith_normal_form_multiprecision(const IntegerMatrix& m);

/// Rank over Z/p by column reduction (independent of the Smith path).
std::size_t rank_mod_p(const IntegerMatrix& m, std::int64_t p);

/// Turns any list of nonzero diagonal entries into the equivalent invariant
/// factor chain: absolute values, same length, each dividing the next.
std::vector<mpz_class> invariant_factor_chain(std::vector<mpz_class> diagonal);

/// Boundary map C_i -> C_{i-1}: columns are i-faces, rows (i-1)-faces, both in
/// the order of SimplicialComplex::faces(). Entry (-1)^j for deleting the j-th vertex.
IntegerMatrix boundary_matrix(const std::vector<std::vector<Simplex>>& faces, int i);
/// Throws std::out_of_range unless 1 <= i <= dim K.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int i);

struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;  ///< invariant factors > 1, each dividing the next
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
  bool is_zero() const { return betti == 0 && torsion.empty(); }
};

/// Unreduced integral homology H_0, H_1, ...
///
/// Comparison ignores trailing zero groups, so profiles computed from
/// complexes of different dimension compare by the groups they carry.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;

  const HomologyGroup& operator[](std::size_t i) const;
  std::size_t size() const { return groups.size(); }
  HomologyProfile trimmed() const;
  /// Alternating sum of Betti numbers.
  std::int64_t euler_characteristic() const;
  /// Betti number of H_i(-; Z/p): betti_i + #torsion_i divisible by p + #torsion_{i-1} divisible by p.
  std::int64_t betti_mod_p(std::size_t i, std::int64_t p) const;
  /// "(Z, Z+Z/2, 0, ...)".
  std::string to_tuple_string() const;

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

HomologyProfile homology(const SimplicialComplex& k, std::size_t face_cap = SimplicialComplex::default_face_cap());

/// Homology of the wedge of n copies of a connected complex with l circles.
/// Throws std::invalid_argument if `base` is not connected (betti_0 != 1).
HomologyProfile wedge_prediction(const HomologyProfile& base, std::int64_t n, std::int64_t l);

/// Outcome of the homology engine's internal consistency checks.
struct HomologySelfCheck {
  bool boundary_squares_to_zero = true;
  bool euler_consistent = true;
  bool mod2_consistent = true;
  bool mod3_consistent = true;
  bool relabel_invariant = true;
  bool all() const {
    return boundary_squares_to_zero && euler_consistent && mod2_consistent && mod3_consistent && relabel_invariant;
  }
};

/// d_{i-1} d_i = 0, Euler characteristic from face counts against Betti
/// numbers, universal coefficients at p = 2, 3, and invariance under a
/// pseudo-random relabeling (seeded by `seed`).
HomologySelfCheck homology_self_check(const SimplicialComplex& k, const HomologyProfile& profile,
                                      std::uint64_t seed = 1);

}  // namespace vth
