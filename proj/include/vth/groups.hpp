#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vth/simplicial.hpp"

namespace vth {

/// Element of a FiniteGroup: the concatenated coordinates of its factors.
/// A cyclic factor contributes one residue, a symmetric factor Sigma_m
/// contributes the one-line notation (values 1..m).
struct Element {
  std::vector<int> coords;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct CyclicFactor {
  int n;
  friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};
struct SymmetricFactor {
  int m;
  friend bool operator==(const SymmetricFactor&, const SymmetricFactor&) = default;
};
using GroupFactor = std::variant<CyclicFactor, SymmetricFactor>;

/// Direct product of cyclic and symmetric groups.
///
/// Elements are enumerated in a fixed order: lexicographic per factor
/// (residues ascending, permutations in lexicographic one-line order), with
/// the last factor varying fastest. `index()` is the position in that order
/// and is what group-derived complexes use as vertex ids.
///
/// Permutations compose right to left: (a*b)(x) = a(b(x)).
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int m);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Parses `cyclic:21`, `sym:4`, `prod:sym:4,cyclic:21`.
  static FiniteGroup parse(std::string_view spec);

  const std::vector<GroupFactor>& factors() const { return factors_; }
  std::string spec() const;

  std::int64_t order() const { return order_; }
  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  /// Throws std::invalid_argument if `a` is not an element of this group.
  void validate(const Element& a) const;

  std::int64_t index(const Element& a) const;
  Element element_at(std::int64_t index) const;
  /// All elements in enumeration order.
  std::vector<Element> elements() const;

  /// Canonical serialization: "5", "[2,1,3,4]", "([2,1,3,4],5)".
  std::string label(const Element& a) const;
  Element parse_label(std::string_view label) const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::vector<GroupFactor> factors_;
  std::int64_t order_ = 1;
};

/// Transposition (1 i) in Sigma_m, as an element of `symmetric(m)`.
Element transposition_one(int m, int i);

/// A group with an ordered list of distinct distinguished elements.
class GroupPair {
 public:
  /// Throws std::invalid_argument on repeated or foreign elements.
  GroupPair(FiniteGroup group, std::vector<Element> distinguished);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Element>& distinguished() const { return distinguished_; }
  std::size_t size() const { return distinguished_.size(); }

 private:
  FiniteGroup group_;
  std::vector<Element> distinguished_;
};

/// Index sequence i_0..i_{2p-1} (0-based) whose alternating product
/// g_{i0} g_{i1}^-1 g_{i2} ... g_{i(2p-1)}^-1 is the identity although no two
/// cyclically adjacent indices coincide.
struct RWitness {
  int p = 0;
  std::vector<int> indices;
  friend bool operator==(const RWitness&, const RWitness&) = default;
};

enum class RSearch { pruned, exhaustive };

/// Alternating product of `indices` over the pair's distinguished elements.
Element alternating_product(const GroupPair& pair, std::span<const int> indices);
bool has_cyclic_repeat(std::span<const int> indices);

/// nullopt when R(p) holds, else the lexicographically least violation.
std::optional<RWitness> satisfies_R(const GroupPair& pair, int p, RSearch mode = RSearch::pruned);
/// Conjunction of R(1)..R(p); returns the first failing witness.
std::optional<RWitness> satisfies_G(const GroupPair& pair, int p, RSearch mode = RSearch::pruned);

/// Graph on all group elements (vertex = element index), x ~ y iff x^-1 y in S.
/// Throws if S contains the identity or is not closed under inverses.
Graph cayley_graph(const FiniteGroup& g, std::span<const Element> connection_set);

/// Elements of <S>, sorted by index.
struct Subgroup {
  FiniteGroup ambient;
  std::vector<Element> elements;
  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  std::vector<Vertex> indices() const;
};

/// Closure of S and the identity; stops with CapExceeded beyond `cap` elements.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators,
                            std::int64_t cap = 1'000'000);

/// Progression-free test: a_i + a_j = 2 a_k only for i = j = k.
bool is_progression_free(std::span<const std::int64_t> a);

/// Sigma_{d+1} x Z/m with g_i = ((1 i+1), a_i). Throws if `a` is not a
/// strictly increasing positive progression-free sequence or m <= 4 a_d.
GroupPair gamma_d_pair(std::span<const std::int64_t> a, int m);

/// Classification of identity words in the transpositions s_i = (1 i) of Sigma_m.
struct TranspositionIdentityReport {
  int m = 0;
  int word_length = 0;
  std::int64_t words_checked = 0;
  std::int64_t identity_words = 0;
  std::int64_t with_adjacent_repeat = 0;
  std::int64_t matching_pattern = 0;
  /// Identity words outside the allowed classes (letters are i in 2..m).
  std::vector<std::vector<int>> exceptions;
};

/// Enumerates all words over {2..m} of length 4, 6 or 8 with identity product.
TranspositionIdentityReport verify_transposition_identities(int m, int word_length);

}  // namespace vth
