#pragma once
// Slow, independent reference computations used to derive expected values.
// Nothing here calls into the library's algorithms beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Face = std::vector<std::int64_t>;
using Dense = std::vector<std::vector<mpz_class>>;

// Every nonempty subset of every facet, grouped by size - 1, sorted.
inline std::vector<std::vector<Face>> all_faces(const std::vector<Face>& facets) {
  std::set<Face> seen;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Face s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      seen.insert(s);
    }
  }
  std::vector<std::vector<Face>> out;
  for (const auto& s : seen) {
    if (out.size() < s.size()) out.resize(s.size());
    out[s.size() - 1].push_back(s);
  }
  for (auto& layer : out) std::sort(layer.begin(), layer.end());
  return out;
}

inline Dense boundary(const std::vector<std::vector<Face>>& faces, std::size_t i) {
  const auto& rows = faces[i - 1];
  const auto& cols = faces[i];
  Dense m(rows.size(), std::vector<mpz_class>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t j = 0; j < cols[c].size(); ++j) {
      Face sub = cols[c];
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
      const auto r = std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin();
      m[static_cast<std::size_t>(r)][c] = (j % 2 == 0) ? 1 : -1;
    }
  return m;
}

// Bareiss fraction-free elimination; returns the rank over Q.
inline std::size_t rational_rank(Dense a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline mpz_class determinant(Dense a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t k = c + 1; k < n; ++k) a[r][k] = (a[c][c] * a[r][k] - a[r][c] * a[c][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
// Exponential; only for matrices with a handful of rows and columns.
inline std::vector<mpz_class> determinantal_invariants(const Dense& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        Dense minor;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          minor.emplace_back();
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) minor.back().push_back(a[r][c]);
        }
        mpz_class d = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

// Textbook Smith normal form by elementary row/column operations on a dense
// matrix: move the entry of least absolute value to the corner, reduce its
// row and column, repeat. Returns the nonzero diagonal in divisibility order.
inline std::vector<mpz_class> textbook_snf(Dense a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        const mpz_class q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        clean = clean && a[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        const mpz_class q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        clean = clean && a[t][c] == 0;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block; otherwise fold a row in.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a[t][c] += a[bad][c];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

struct Group {
  long long betti = 0;
  std::vector<long long> torsion;
};

// Integral homology through the textbook SNF.
inline std::vector<Group> homology(const std::vector<Face>& facets) {
  const auto faces = all_faces(facets);
  const std::size_t top = faces.size();
  std::vector<std::size_t> rank(top + 1, 0);
  std::vector<std::vector<long long>> torsion(top + 1);
  for (std::size_t i = 1; i < top; ++i) {
    const auto diag = textbook_snf(boundary(faces, i));
    rank[i] = diag.size();
    for (const auto& d : diag)
      if (d > 1) torsion[i - 1].push_back(d.get_si());
  }
  std::vector<Group> out;
  for (std::size_t i = 0; i < top; ++i) {
    Group g;
    g.betti = static_cast<long long>(faces[i].size() - rank[i] - rank[i + 1]);
    g.torsion = torsion[i];
    std::sort(g.torsion.begin(), g.torsion.end());
    out.push_back(g);
  }
  return out;
}

inline bool golomb(const std::vector<std::int64_t>& marks) {
  std::vector<std::int64_t> diffs;
  for (std::size_t i = 0; i < marks.size(); ++i)
    for (std::size_t j = 0; j < marks.size(); ++j)
      if (marks[j] > marks[i]) diffs.push_back(marks[j] - marks[i]);
  std::sort(diffs.begin(), diffs.end());
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

inline bool progression_free(const std::vector<std::int64_t>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[i] + a[j] == 2 * a[k] && !(i == j && j == k)) return false;
  return true;
}

// Maximal cliques of a graph on 0..n-1 by scanning all vertex subsets.
inline std::vector<Face> maximal_cliques(int n, const std::set<std::pair<int, int>>& edges) {
  auto adj = [&](int u, int v) { return edges.count({std::min(u, v), std::max(u, v)}) > 0; };
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !adj(u, v)) ok = false;
    if (ok) cliques.push_back(mask);
  }
  std::vector<Face> out;
  for (auto c : cliques) {
    bool maximal = true;
    for (auto d : cliques)
      if (d != c && (d & c) == c) maximal = false;
    if (!maximal) continue;
    Face f;
    for (int v = 0; v < n; ++v)
      if (c >> v & 1) f.push_back(v);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Shortest alternating cycle v0 X0 v1 X1 ... with distinct vertices and
// distinct parts, at least 3 parts, by exhaustive DFS. 0 = none.
inline std::size_t cluster_girth(const std::vector<Face>& parts) {
  std::size_t best = 0;
  std::vector<int> used_parts;
  std::vector<std::int64_t> used_vertices;
  std::function<void(std::int64_t, std::int64_t)> dfs = [&](std::int64_t start, std::int64_t v) {
    if (best && used_parts.size() >= best) return;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (std::find(used_parts.begin(), used_parts.end(), static_cast<int>(p)) != used_parts.end()) continue;
      if (!std::binary_search(parts[p].begin(), parts[p].end(), v)) continue;
      used_parts.push_back(static_cast<int>(p));
      for (std::int64_t w : parts[p]) {
        if (w == v) continue;
        if (w == start && used_parts.size() >= 3) {
          if (!best || used_parts.size() < best) best = used_parts.size();
          continue;
        }
        if (std::find(used_vertices.begin(), used_vertices.end(), w) != used_vertices.end()) continue;
        used_vertices.push_back(w);
        dfs(start, w);
        used_vertices.pop_back();
      }
      used_parts.pop_back();
    }
  };
  std::set<std::int64_t> vertices;
  for (const auto& p : parts) vertices.insert(p.begin(), p.end());
  for (std::int64_t s : vertices) {
    used_vertices = {s};
    dfs(s, s);
  }
  return best;
}

// Random facets on 0..n-1: `count` random subsets of size 1..max_size.
inline std::vector<Face> random_facets(std::mt19937_64& rng, int n, int count, int max_size) {
  std::vector<Face> out;
  std::uniform_int_distribution<int> size(1, max_size), vertex(0, n - 1);
  for (int i = 0; i < count; ++i) {
    std::set<std::int64_t> f;
    const int s = size(rng);
    while (static_cast<int>(f.size()) < s) f.insert(vertex(rng));
    out.emplace_back(f.begin(), f.end());
  }
  return out;
}

inline std::set<std::pair<int, int>> random_edges(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::set<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.insert({u, v});
  return e;
}

}  // namespace oracle
