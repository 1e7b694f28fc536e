#include "vth/homology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace vth {

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.columns_[c].emplace_back(r, rows[r][c]);
  }
  return m;
}

std::int64_t IntegerMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  return it != col.end() && it->first == r ? it->second : 0;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_) throw std::out_of_range("row out of range");
  auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    if (value == 0) col.erase(it);
    else it->second = value;
  } else if (value != 0) {
    col.insert(it, {r, value});
  }
}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  IntegerMatrix out(a.rows(), b.cols());
  std::vector<std::int64_t> acc(a.rows(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    touched.clear();
    for (const auto& [k, bv] : b.column(c))
      for (const auto& [r, av] : a.column(k)) {
        std::int64_t prod = 0;
        if (__builtin_mul_overflow(av, bv, &prod) || __builtin_add_overflow(acc[r], prod, &acc[r]))
          throw std::overflow_error("matrix product overflows int64");
        touched.push_back(r);
      }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t r : touched) {
      if (acc[r] != 0) out.columns_[c].emplace_back(r, acc[r]);
      acc[r] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Int64Overflow {};

template <class S>
struct Arith;

template <>
struct Arith<std::int64_t> {
  static std::int64_t from(std::int64_t v) { return v; }
  static std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
    std::int64_t p = 0, r = 0;
    if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Int64Overflow{};
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t p = 0;
    if (__builtin_mul_overflow(a, b, &p)) throw Int64Overflow{};
    return p;
  }
  static std::int64_t abs(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw Int64Overflow{};
    return a < 0 ? -a : a;
  }
  static bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
  static mpz_class to_mpz(std::int64_t a) { return mpz_class(static_cast<long>(a)); }
};

template <>
struct Arith<mpz_class> {
  static mpz_class from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static mpz_class sub_mul(const mpz_class& a, const mpz_class& f, const mpz_class& b) { return a - f * b; }
  static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
  static mpz_class abs(const mpz_class& a) { return ::abs(a); }
  static bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }
  static mpz_class to_mpz(const mpz_class& a) { return a; }
};

template <class S>
class SmithReducer {
  using A = Arith<S>;
  using Column = std::vector<std::pair<std::size_t, S>>;

 public:
  explicit SmithReducer(const IntegerMatrix& m) : rows_(m.rows()), cols_(m.cols()), row_cols_(m.rows()) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (const auto& [r, v] : m.column(c)) {
        cols_[c].emplace_back(r, A::from(v));
        row_cols_[r].insert(c);
      }
    }
  }

  SmithForm run() {
    SmithForm out;
    eliminate_unit_pivots(out);
    dense_remainder(out);
    return out;
  }

 private:
  // Pivots on entries equal to +-1, cheapest columns first. A unit pivot
  // contributes one invariant factor 1 and leaves the Schur complement.
  void eliminate_unit_pivots(SmithForm& out) {
    using Item = std::pair<std::size_t, std::size_t>;  // (nnz, column)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) queue.emplace(cols_[c].size(), c);

    while (!queue.empty()) {
      const auto [nnz, c] = queue.top();
      queue.pop();
      if (cols_[c].empty() || cols_[c].size() != nnz) continue;

      std::size_t pivot_row = SIZE_MAX;
      std::size_t best = SIZE_MAX;
      S pivot{};
      for (const auto& [r, v] : cols_[c]) {
        if (A::is_unit(v) && row_cols_[r].size() < best) {
          best = row_cols_[r].size();
          pivot_row = r;
          pivot = v;
        }
      }
      if (pivot_row == SIZE_MAX) continue;  // no unit here yet; revisited if the column changes

      // Clear the pivot row with column operations.
      const std::vector<std::size_t> others(row_cols_[pivot_row].begin(), row_cols_[pivot_row].end());
      for (std::size_t j : others) {
        if (j == c) continue;
        const S factor = A::mul(entry(j, pivot_row), pivot);  // pivot^-1 == pivot
        axpy(j, factor, c);
        queue.emplace(cols_[j].size(), j);
      }
      for (const auto& [r, v] : cols_[c]) row_cols_[r].erase(c);
      cols_[c].clear();
      ++out.rank;
      ++out.unit_factors;
    }
  }

  const S& entry(std::size_t col, std::size_t row) const {
    const auto& column = cols_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    return it->second;
  }

  // column[target] -= factor * column[source]
  void axpy(std::size_t target, const S& factor, std::size_t source) {
    const Column& src = cols_[source];
    Column& dst = cols_[target];
    Column merged;
    merged.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
      if (b == src.end() || (a != dst.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == dst.end() || b->first < a->first) {
        S v = A::sub_mul(S{0}, factor, b->second);
        row_cols_[b->first].insert(target);
        merged.emplace_back(b->first, std::move(v));
        ++b;
      } else {
        S v = A::sub_mul(a->second, factor, b->second);
        if (v == 0) row_cols_[a->first].erase(target);
        else merged.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    dst = std::move(merged);
  }

  // Diagonalizes whatever survived the unit pass.
  void dense_remainder(SmithForm& out) {
    std::vector<std::size_t> live_cols;
    std::set<std::size_t> live_rows;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (cols_[c].empty()) continue;
      live_cols.push_back(c);
      for (const auto& [r, v] : cols_[c]) live_rows.insert(r);
    }
    if (live_cols.empty()) return;
    const std::vector<std::size_t> rows(live_rows.begin(), live_rows.end());
    const std::size_t nr = rows.size(), nc = live_cols.size();
    std::vector<std::vector<S>> a(nr, std::vector<S>(nc, S{0}));
    for (std::size_t j = 0; j < nc; ++j)
      for (const auto& [r, v] : cols_[live_cols[j]])
        a[static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin())][j] = v;

    std::vector<mpz_class> diagonal;
    for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
      if (!move_smallest_to(a, t, t, nr, nc)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < nr; ++i) {
          if (a[i][t] == 0) continue;
          const S q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < nc; ++j) a[i][j] = A::sub_mul(a[i][j], q, a[t][j]);
          if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (a[t][j] == 0) continue;
          const S q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < nr; ++i) a[i][j] = A::sub_mul(a[i][j], q, a[i][t]);
          if (a[t][j] != 0) clean = false;
        }
        if (clean) break;
        // A remainder is smaller than the pivot; bring it to (t, t).
        move_smallest_in_cross(a, t, nr, nc);
      }
      diagonal.push_back(A::to_mpz(a[t][t]));
    }
    out.rank += diagonal.size();
    for (auto& f : invariant_factor_chain(std::move(diagonal))) {
      if (f == 1) ++out.unit_factors;
      else out.nontrivial.push_back(std::move(f));
    }
  }

  static void swap_rows(std::vector<std::vector<S>>& a, std::size_t i, std::size_t k) { std::swap(a[i], a[k]); }
  static void swap_cols(std::vector<std::vector<S>>& a, std::size_t j, std::size_t k) {
    for (auto& row : a) std::swap(row[j], row[k]);
  }

  static bool move_smallest_to(std::vector<std::vector<S>>& a, std::size_t t, std::size_t, std::size_t nr,
                               std::size_t nc) {
    bool found = false;
    std::size_t bi = 0, bj = 0;
    S best{0};
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a[i][j] != 0 && (!found || A::abs(a[i][j]) < best)) {
          found = true;
          best = A::abs(a[i][j]);
          bi = i;
          bj = j;
        }
    if (!found) return false;
    swap_rows(a, t, bi);
    swap_cols(a, t, bj);
    return true;
  }

  static void move_smallest_in_cross(std::vector<std::vector<S>>& a, std::size_t t, std::size_t nr, std::size_t nc) {
    std::size_t bi = t, bj = t;
    S best = A::abs(a[t][t]);
    for (std::size_t i = t + 1; i < nr; ++i)
      if (a[i][t] != 0 && A::abs(a[i][t]) < best) {
        best = A::abs(a[i][t]);
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < nc; ++j)
      if (a[t][j] != 0 && A::abs(a[t][j]) < best) {
        best = A::abs(a[t][j]);
        bi = t;
        bj = j;
      }
    swap_rows(a, t, bi);
    swap_cols(a, t, bj);
  }

  std::size_t rows_;
  std::vector<Column> cols_;
  std::vector<std::set<std::size_t>> row_cols_;
};

}  // namespace

std::vector<mpz_class> SmithForm::invariant_factors() const {
  std::vector<mpz_class> out(unit_factors, mpz_class(1));
  out.insert(out.end(), nontrivial.begin(), nontrivial.end());
  return out;
}

std::vector<mpz_class> invariant_factor_chain(std::vector<mpz_class> diagonal) {
  for (auto& d : diagonal) {
    d = abs(d);
    if (d == 0) throw std::invalid_argument("invariant_factor_chain expects nonzero entries");
  }
  // Replacing (x, y) by (gcd, lcm) keeps the module and ends in a chain.
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      mpz_class g = gcd(diagonal[i], diagonal[j]);
      if (g == diagonal[i]) continue;
      mpz_class l = lcm(diagonal[i], diagonal[j]);
      diagonal[i] = g;
      diagonal[j] = l;
    }
  return diagonal;
}

SmithForm smith_normal_form_multiprecision(const IntegerMatrix& m) { return SmithReducer<mpz_class>(m).run(); }

SmithForm smith_normal_form(const IntegerMatrix& m) {
  try {
    return SmithReducer<std::int64_t>(m).run();
  } catch (const Int64Overflow&) {
    return smith_normal_form_multiprecision(m);
  }
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p needs p >= 2");
  auto inv = [p](std::int64_t a) {
    // p is small and prime for our uses; Fermat via square-and-multiply.
    std::int64_t r = 1, b = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  using Column = std::vector<std::pair<std::size_t, std::int64_t>>;
  std::vector<Column> reduced;
  std::vector<std::size_t> owner(m.rows(), SIZE_MAX);  // lowest row -> index in `reduced`
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Column col;
    for (const auto& [r, v] : m.column(c)) {
      const std::int64_t x = ((v % p) + p) % p;
      if (x != 0) col.emplace_back(r, x);
    }
    while (!col.empty()) {
      const std::size_t low = col.back().first;
      if (owner[low] == SIZE_MAX) {
        owner[low] = reduced.size();
        reduced.push_back(std::move(col));
        break;
      }
      const Column& piv = reduced[owner[low]];
      const std::int64_t f = col.back().second * inv(piv.back().second) % p;
      Column next;
      auto a = col.begin();
      auto b = piv.begin();
      while (a != col.end() || b != piv.end()) {
        if (b == piv.end() || (a != col.end() && a->first < b->first)) {
          next.push_back(*a++);
        } else if (a == col.end() || b->first < a->first) {
          next.emplace_back(b->first, (p - f * b->second % p) % p);
          ++b;
        } else {
          const std::int64_t x = ((a->second - f * b->second) % p + p) % p;
          if (x != 0) next.emplace_back(a->first, x);
          ++a;
          ++b;
        }
      }
      col = std::move(next);
    }
  }
  return reduced.size();
}

// ---------------------------------------------------------------------------
// Boundary matrices and homology

IntegerMatrix boundary_matrix(const std::vector<std::vector<Simplex>>& faces, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= faces.size())
    throw std::out_of_range("boundary_matrix: dimension " + std::to_string(i) + " out of range");
  const auto& lower = faces[static_cast<std::size_t>(i - 1)];
  const auto& upper = faces[static_cast<std::size_t>(i)];
  IntegerMatrix m(lower.size(), upper.size());
  Simplex sub;
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Simplex& s = upper[c];
    for (std::size_t j = 0; j < s.size(); ++j) {
      sub.assign(s.begin(), s.end());
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      if (it == lower.end() || *it != sub) throw std::logic_error("face list is not downward closed");
      m.set(static_cast<std::size_t>(it - lower.begin()), c, j % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int i) { return boundary_matrix(k.faces(), i); }

const HomologyGroup& HomologyProfile::operator[](std::size_t i) const {
  static const HomologyGroup zero{};
  return i < groups.size() ? groups[i] : zero;
}

HomologyProfile HomologyProfile::trimmed() const {
  HomologyProfile out = *this;
  while (!out.groups.empty() && out.groups.back().is_zero()) out.groups.pop_back();
  return out;
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) { return a.trimmed().groups == b.trimmed().groups; }

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * groups[i].betti;
  return chi;
}

std::int64_t HomologyProfile::betti_mod_p(std::size_t i, std::int64_t p) const {
  auto divisible = [p](const HomologyGroup& g) {
    return static_cast<std::int64_t>(std::count_if(g.torsion.begin(), g.torsion.end(), [p](std::int64_t t) { return t % p == 0; }));
  };
  std::int64_t b = (*this)[i].betti + divisible((*this)[i]);
  if (i > 0) b += divisible((*this)[i - 1]);
  return b;
}

std::string HomologyProfile::to_tuple_string() const {
  auto power = [](const std::string& base, std::int64_t e, bool paren) {
    if (e == 1) return base;
    return (paren ? "(" + base + ")" : base) + "^" + std::to_string(e);
  };
  std::string out = "(";
  const auto t = trimmed();
  for (std::size_t i = 0; i < t.groups.size(); ++i) {
    const auto& g = t.groups[i];
    std::vector<std::string> terms;
    if (g.betti > 0) terms.push_back(power("Z", g.betti, false));
    for (std::size_t j = 0; j < g.torsion.size();) {
      std::size_t k = j;
      while (k < g.torsion.size() && g.torsion[k] == g.torsion[j]) ++k;
      terms.push_back(power("Z/" + std::to_string(g.torsion[j]), static_cast<std::int64_t>(k - j), true));
      j = k;
    }
    std::string group;
    for (std::size_t j = 0; j < terms.size(); ++j) group += (j ? "+" : "") + terms[j];
    out += (group.empty() ? "0" : group) + ", ";
  }
  return out + "0, ...)";
}

HomologyProfile homology(const SimplicialComplex& k, std::size_t face_cap) {
  HomologyProfile profile;
  if (k.empty()) return profile;
  const auto faces = k.faces(face_cap);
  const std::size_t top = faces.size();
  std::vector<std::size_t> rank(top + 1, 0);  // rank[i] = rank of d_i
  std::vector<std::vector<std::int64_t>> torsion(top + 1);
  for (std::size_t i = 1; i < top; ++i) {
    const SmithForm snf = smith_normal_form(boundary_matrix(faces, static_cast<int>(i)));
    rank[i] = snf.rank;
    for (const auto& f : snf.nontrivial) {
      if (!f.fits_slong_p()) throw std::overflow_error("torsion coefficient does not fit in 64 bits");
      torsion[i - 1].push_back(f.get_si());
    }
  }
  for (std::size_t i = 0; i < top; ++i) {
    HomologyGroup g;
    g.betti = static_cast<std::int64_t>(faces[i].size() - rank[i] - rank[i + 1]);
    g.torsion = torsion[i];
    profile.groups.push_back(std::move(g));
  }
  return profile;
}

HomologyProfile wedge_prediction(const HomologyProfile& base, std::int64_t n, std::int64_t l) {
  if (base[0].betti != 1 || !base[0].torsion.empty())
    throw std::invalid_argument("wedge_prediction needs the profile of a connected complex");
  if (n < 1 || l < 0) throw std::invalid_argument("wedge_prediction needs n >= 1 and l >= 0");
  HomologyProfile out;
  out.groups.resize(std::max<std::size_t>(base.size(), 2));
  out.groups[0].betti = 1;
  for (std::size_t i = 1; i < out.groups.size(); ++i) {
    out.groups[i].betti = n * base[i].betti + (i == 1 ? l : 0);
    std::vector<mpz_class> factors;
    for (std::int64_t rep = 0; rep < n; ++rep)
      for (std::int64_t t : base[i].torsion) factors.emplace_back(static_cast<long>(t));
    for (const auto& f : invariant_factor_chain(std::move(factors)))
      if (f != 1) out.groups[i].torsion.push_back(f.get_si());
  }
  return out;
}

HomologySelfCheck homology_self_check(const SimplicialComplex& k, const HomologyProfile& profile, std::uint64_t seed) {
  HomologySelfCheck check;
  if (k.empty()) return check;
  const auto faces = k.faces();
  const std::size_t top = faces.size();
  std::vector<IntegerMatrix> d(top + 1);
  for (std::size_t i = 1; i < top; ++i) d[i] = boundary_matrix(faces, static_cast<int>(i));
  for (std::size_t i = 2; i < top; ++i)
    if (!(d[i - 1] * d[i]).is_zero()) check.boundary_squares_to_zero = false;

  std::int64_t chi = 0;
  for (std::size_t i = 0; i < top; ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(faces[i].size());
  check.euler_consistent = chi == profile.euler_characteristic();

  for (std::int64_t p : {2, 3}) {
    std::vector<std::size_t> r(top + 1, 0);
    for (std::size_t i = 1; i < top; ++i) r[i] = rank_mod_p(d[i], p);
    bool ok = true;
    for (std::size_t i = 0; i < top; ++i) {
      const auto bp = static_cast<std::int64_t>(faces[i].size() - r[i] - r[i + 1]);
      if (bp != profile.betti_mod_p(i, p)) ok = false;
    }
    (p == 2 ? check.mod2_consistent : check.mod3_consistent) = ok;
  }

  std::vector<Vertex> from = k.vertices();
  std::vector<Vertex> to = from;
  std::mt19937_64 rng(seed);
  std::shuffle(to.begin(), to.end(), rng);
  check.relabel_invariant = homology(relabel(k, from, to)) == profile;
  return check;
}

}  // namespace vth
