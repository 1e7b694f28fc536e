#include "vth/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "vth/errors.hpp"

namespace vth {

namespace {

int factor_width(const GroupFactor& f) {
  return std::visit([](const auto& x) -> int {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CyclicFactor>) return 1;
    else return x.m;
  }, f);
}

std::int64_t factor_order(const GroupFactor& f) {
  return std::visit([](const auto& x) -> std::int64_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CyclicFactor>) {
      return x.n;
    } else {
      std::int64_t r = 1;
      for (int i = 2; i <= x.m; ++i) r *= i;
      return r;
    }
  }, f);
}

// Lexicographic rank of a permutation of 1..m (Lehmer code).
std::int64_t permutation_rank(std::span<const int> p) {
  const int m = static_cast<int>(p.size());
  std::int64_t rank = 0;
  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int v = 1; v < p[i]; ++v)
      if (!used[v]) ++smaller;
    used[p[i]] = 1;
    rank = rank * (m - i) + smaller;
  }
  return rank;
}

std::vector<int> permutation_unrank(int m, std::int64_t rank) {
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    const int base = m - i;
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  for (int i = 0; i < m; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return out;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

GroupFactor parse_factor(std::string_view s) {
  if (s.starts_with("cyclic:")) {
    const int n = parse_int(s.substr(7));
    if (n < 1) throw std::invalid_argument("cyclic order must be positive");
    return CyclicFactor{n};
  }
  if (s.starts_with("sym:")) {
    const int m = parse_int(s.substr(4));
    if (m < 1 || m > 12) throw std::invalid_argument("symmetric degree must be in 1..12");
    return SymmetricFactor{m};
  }
  throw std::invalid_argument("unknown group factor '" + std::string(s) + "'");
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(int n) { return parse("cyclic:" + std::to_string(n)); }
FiniteGroup FiniteGroup::symmetric(int m) { return parse("sym:" + std::to_string(m)); }

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.factors_ = a.factors_;
  g.factors_.insert(g.factors_.end(), b.factors_.begin(), b.factors_.end());
  g.order_ = a.order_ * b.order_;
  return g;
}

FiniteGroup FiniteGroup::parse(std::string_view spec) {
  FiniteGroup g;
  if (spec.starts_with("prod:")) {
    spec.remove_prefix(5);
    while (!spec.empty()) {
      const auto comma = spec.find(',');
      g.factors_.push_back(parse_factor(spec.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      spec.remove_prefix(comma + 1);
    }
    if (g.factors_.empty()) throw std::invalid_argument("empty product");
  } else {
    g.factors_.push_back(parse_factor(spec));
  }
  for (const auto& f : g.factors_) g.order_ *= factor_order(f);
  return g;
}

std::string FiniteGroup::spec() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += ",";
    if (auto* c = std::get_if<CyclicFactor>(&f)) out += "cyclic:" + std::to_string(c->n);
    else out += "sym:" + std::to_string(std::get<SymmetricFactor>(f).m);
  }
  return factors_.size() > 1 ? "prod:" + out : out;
}

Element FiniteGroup::identity() const {
  Element e;
  for (const auto& f : factors_) {
    if (std::holds_alternative<CyclicFactor>(f)) {
      e.coords.push_back(0);
    } else {
      for (int i = 1; i <= std::get<SymmetricFactor>(f).m; ++i) e.coords.push_back(i);
    }
  }
  return e;
}

Element FiniteGroup::multiply(const Element& a, const Element& b) const {
  Element r;
  r.coords.resize(a.coords.size());
  std::size_t off = 0;
  for (const auto& f : factors_) {
    if (auto* c = std::get_if<CyclicFactor>(&f)) {
      r.coords[off] = (a.coords[off] + b.coords[off]) % c->n;
      off += 1;
    } else {
      const int m = std::get<SymmetricFactor>(f).m;
      for (int x = 0; x < m; ++x) r.coords[off + x] = a.coords[off + b.coords[off + x] - 1];
      off += static_cast<std::size_t>(m);
    }
  }
  return r;
}

Element FiniteGroup::inverse(const Element& a) const {
  Element r;
  r.coords.resize(a.coords.size());
  std::size_t off = 0;
  for (const auto& f : factors_) {
    if (auto* c = std::get_if<CyclicFactor>(&f)) {
      r.coords[off] = (c->n - a.coords[off]) % c->n;
      off += 1;
    } else {
      const int m = std::get<SymmetricFactor>(f).m;
      for (int x = 0; x < m; ++x) r.coords[off + a.coords[off + x] - 1] = x + 1;
      off += static_cast<std::size_t>(m);
    }
  }
  return r;
}

void FiniteGroup::validate(const Element& a) const {
  std::size_t width = 0;
  for (const auto& f : factors_) width += static_cast<std::size_t>(factor_width(f));
  if (a.coords.size() != width) throw std::invalid_argument("element has wrong number of coordinates");
  std::size_t off = 0;
  for (const auto& f : factors_) {
    if (auto* c = std::get_if<CyclicFactor>(&f)) {
      if (a.coords[off] < 0 || a.coords[off] >= c->n) throw std::invalid_argument("residue out of range");
      off += 1;
    } else {
      const int m = std::get<SymmetricFactor>(f).m;
      std::vector<int> seen(a.coords.begin() + static_cast<std::ptrdiff_t>(off),
                            a.coords.begin() + static_cast<std::ptrdiff_t>(off + m));
      std::sort(seen.begin(), seen.end());
      for (int x = 0; x < m; ++x)
        if (seen[x] != x + 1) throw std::invalid_argument("not a permutation of 1.." + std::to_string(m));
      off += static_cast<std::size_t>(m);
    }
  }
}

std::int64_t FiniteGroup::index(const Element& a) const {
  std::int64_t idx = 0;
  std::size_t off = 0;
  for (const auto& f : factors_) {
    idx *= factor_order(f);
    if (std::holds_alternative<CyclicFactor>(f)) {
      idx += a.coords[off];
      off += 1;
    } else {
      const int m = std::get<SymmetricFactor>(f).m;
      idx += permutation_rank(std::span(a.coords).subspan(off, static_cast<std::size_t>(m)));
      off += static_cast<std::size_t>(m);
    }
  }
  return idx;
}

Element FiniteGroup::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
  std::vector<std::int64_t> parts(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::int64_t o = factor_order(factors_[i]);
    parts[i] = index % o;
    index /= o;
  }
  Element e;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (std::holds_alternative<CyclicFactor>(factors_[i])) {
      e.coords.push_back(static_cast<int>(parts[i]));
    } else {
      auto p = permutation_unrank(std::get<SymmetricFactor>(factors_[i]).m, parts[i]);
      e.coords.insert(e.coords.end(), p.begin(), p.end());
    }
  }
  return e;
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string FiniteGroup::label(const Element& a) const {
  std::vector<std::string> parts;
  std::size_t off = 0;
  for (const auto& f : factors_) {
    if (std::holds_alternative<CyclicFactor>(f)) {
      parts.push_back(std::to_string(a.coords[off]));
      off += 1;
    } else {
      const int m = std::get<SymmetricFactor>(f).m;
      std::string s = "[";
      for (int x = 0; x < m; ++x) {
        if (x) s += ",";
        s += std::to_string(a.coords[off + x]);
      }
      parts.push_back(s + "]");
      off += static_cast<std::size_t>(m);
    }
  }
  if (parts.size() == 1) return parts.front();
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ")";
}

Element FiniteGroup::parse_label(std::string_view label) const {
  if (factors_.size() > 1) {
    if (label.size() < 2 || label.front() != '(' || label.back() != ')')
      throw std::invalid_argument("product label must be parenthesised: " + std::string(label));
    label = label.substr(1, label.size() - 2);
  }
  Element e;
  for (char ch : label)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']' || ch == '-'))
      throw std::invalid_argument("bad character in element label: " + std::string(label));
  std::size_t pos = 0;
  while (pos < label.size()) {
    if (label[pos] == ',' || label[pos] == '[' || label[pos] == ']') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < label.size() && label[end] != ',' && label[end] != ']') ++end;
    e.coords.push_back(parse_int(label.substr(pos, end - pos)));
    pos = end;
  }
  validate(e);
  return e;
}

Element transposition_one(int m, int i) {
  if (i < 2 || i > m) throw std::invalid_argument("transposition (1 i) needs 2 <= i <= m");
  Element e;
  for (int x = 1; x <= m; ++x) e.coords.push_back(x);
  std::swap(e.coords[0], e.coords[i - 1]);
  return e;
}

GroupPair::GroupPair(FiniteGroup group, std::vector<Element> distinguished)
    : group_(std::move(group)), distinguished_(std::move(distinguished)) {
  std::set<Element> seen;
  for (const auto& g : distinguished_) {
    group_.validate(g);
    if (!seen.insert(g).second)
      throw std::invalid_argument("distinguished elements must be distinct: " + group_.label(g) + " repeats");
  }
}

Element alternating_product(const GroupPair& pair, std::span<const int> indices) {
  const auto& g = pair.group();
  Element acc = g.identity();
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const Element& x = pair.distinguished().at(static_cast<std::size_t>(indices[t]));
    acc = g.multiply(acc, t % 2 == 0 ? x : g.inverse(x));
  }
  return acc;
}

bool has_cyclic_repeat(std::span<const int> indices) {
  const std::size_t n = indices.size();
  for (std::size_t t = 0; t < n; ++t)
    if (indices[t] == indices[(t + 1) % n]) return true;
  return false;
}

namespace {

std::optional<RWitness> search_exhaustive(const GroupPair& pair, int p) {
  const int d = static_cast<int>(pair.size());
  const int len = 2 * p;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  const Element e = pair.group().identity();
  while (true) {
    if (!has_cyclic_repeat(seq) && alternating_product(pair, seq) == e) return RWitness{p, seq};
    int t = len - 1;
    while (t >= 0 && seq[t] == d - 1) seq[t--] = 0;
    if (t < 0) return std::nullopt;
    ++seq[t];
  }
}

// Depth-first search in lexicographic order. Once the remaining suffix is at
// most p letters long, the prefix is abandoned unless its inverse is the
// product of some suffix word of that length.
std::optional<RWitness> search_pruned(const GroupPair& pair, int p) {
  const auto& g = pair.group();
  const int d = static_cast<int>(pair.size());
  const int len = 2 * p;
  std::vector<Element> letter(static_cast<std::size_t>(2 * d));  // [i] = g_i, [d+i] = g_i^-1
  for (int i = 0; i < d; ++i) {
    letter[i] = pair.distinguished()[i];
    letter[d + i] = g.inverse(pair.distinguished()[i]);
  }
  auto letter_at = [&](int pos, int i) -> const Element& { return letter[pos % 2 == 0 ? i : d + i]; };

  // suffix[L] = indices of products of the letters at positions len-L..len-1.
  std::vector<std::unordered_set<std::int64_t>> suffix(static_cast<std::size_t>(p) + 1);
  std::vector<Element> layer{g.identity()};
  suffix[0].insert(g.index(g.identity()));
  for (int L = 1; L <= p; ++L) {
    const int pos = len - L;
    std::set<Element> next;
    for (const auto& s : layer)
      for (int i = 0; i < d; ++i) next.insert(g.multiply(letter_at(pos, i), s));
    layer.assign(next.begin(), next.end());
    for (const auto& s : layer) suffix[L].insert(g.index(s));
  }

  std::vector<int> seq(static_cast<std::size_t>(len));
  std::vector<Element> prefix(static_cast<std::size_t>(len) + 1);
  prefix[0] = g.identity();
  std::function<bool(int)> dfs = [&](int t) -> bool {
    if (t == len) return prefix[len] == prefix[0] && seq[len - 1] != seq[0];
    const int remaining = len - t;
    if (remaining <= p && !suffix[remaining].contains(g.index(g.inverse(prefix[t])))) return false;
    for (int i = 0; i < d; ++i) {
      if (t > 0 && seq[t - 1] == i) continue;
      seq[t] = i;
      prefix[t + 1] = g.multiply(prefix[t], letter_at(t, i));
      if (dfs(t + 1)) return true;
    }
    return false;
  };
  if (dfs(0)) return RWitness{p, seq};
  return std::nullopt;
}

}  // namespace

std::optional<RWitness> satisfies_R(const GroupPair& pair, int p, RSearch mode) {
  if (p < 1) throw std::invalid_argument("R(p) needs p >= 1");
  if (pair.size() == 0) return std::nullopt;
  return mode == RSearch::pruned ? search_pruned(pair, p) : search_exhaustive(pair, p);
}

std::optional<RWitness> satisfies_G(const GroupPair& pair, int p, RSearch mode) {
  if (p < 1) throw std::invalid_argument("G(p) needs p >= 1");
  for (int q = 1; q <= p; ++q)
    if (auto w = satisfies_R(pair, q, mode)) return w;
  return std::nullopt;
}

Graph cayley_graph(const FiniteGroup& g, std::span<const Element> connection_set) {
  std::set<Element> s(connection_set.begin(), connection_set.end());
  for (const auto& x : s) {
    g.validate(x);
    if (x == g.identity()) throw std::invalid_argument("connection set contains the identity");
    if (!s.contains(g.inverse(x))) throw std::invalid_argument("connection set is not inverse-closed: " + g.label(x));
  }
  std::vector<Vertex> vertices(static_cast<std::size_t>(g.order()));
  std::iota(vertices.begin(), vertices.end(), Vertex{0});
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    const Element x = g.element_at(i);
    for (const auto& y : s) {
      const std::int64_t j = g.index(g.multiply(x, y));
      if (i < j) edges.emplace_back(i, j);
    }
  }
  return Graph(std::move(vertices), edges);
}

std::vector<Vertex> Subgroup::indices() const {
  std::vector<Vertex> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(ambient.index(e));
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators, std::int64_t cap) {
  std::vector<Element> gens;
  for (const auto& x : generators) {
    g.validate(x);
    gens.push_back(x);
    gens.push_back(g.inverse(x));
  }
  std::set<Element> seen{g.identity()};
  std::queue<Element> todo;
  todo.push(g.identity());
  while (!todo.empty()) {
    const Element x = todo.front();
    todo.pop();
    for (const auto& s : gens) {
      Element y = g.multiply(x, s);
      if (seen.insert(y).second) {
        if (static_cast<std::int64_t>(seen.size()) > cap)
          throw CapExceeded("generated subgroup exceeds " + std::to_string(cap) + " elements");
        todo.push(std::move(y));
      }
    }
  }
  Subgroup sub{g, {seen.begin(), seen.end()}};
  std::sort(sub.elements.begin(), sub.elements.end(),
            [&](const Element& a, const Element& b) { return g.index(a) < g.index(b); });
  return sub;
}

bool is_progression_free(std::span<const std::int64_t> a) {
  const std::set<std::int64_t> values(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const std::int64_t s = a[i] + a[j];
      if (s % 2 == 0 && values.contains(s / 2)) return false;
    }
  return values.size() == a.size();
}

GroupPair gamma_d_pair(std::span<const std::int64_t> a, int m) {
  if (a.empty()) throw std::invalid_argument("gamma_d_pair needs d >= 1");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] <= 0 || (i > 0 && a[i] <= a[i - 1]))
      throw std::invalid_argument("sequence must be strictly increasing and positive");
  if (!is_progression_free(a)) throw std::invalid_argument("sequence is not progression-free");
  if (static_cast<std::int64_t>(m) <= 4 * a.back())
    throw std::invalid_argument("modulus must exceed 4*a_d = " + std::to_string(4 * a.back()));
  const int d = static_cast<int>(a.size());
  FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::symmetric(d + 1), FiniteGroup::cyclic(m));
  std::vector<Element> dist;
  for (int i = 1; i <= d; ++i) {
    Element e = transposition_one(d + 1, i + 1);
    e.coords.push_back(static_cast<int>(a[i - 1] % m));
    dist.push_back(std::move(e));
  }
  return GroupPair(std::move(g), std::move(dist));
}

namespace {

// True if `word` equals `pattern` under an injective substitution of pattern
// letters by word letters.
bool matches_injectively(std::span<const int> word, std::string_view pattern) {
  std::vector<std::pair<char, int>> binding;
  for (std::size_t t = 0; t < word.size(); ++t) {
    auto it = std::find_if(binding.begin(), binding.end(), [&](const auto& b) { return b.first == pattern[t]; });
    if (it == binding.end()) {
      for (const auto& b : binding)
        if (b.second == word[t]) return false;
      binding.emplace_back(pattern[t], word[t]);
    } else if (it->second != word[t]) {
      return false;
    }
  }
  return true;
}

bool matches_up_to_rotation(std::span<const int> word, std::string_view pattern) {
  std::vector<int> rotated(word.begin(), word.end());
  for (std::size_t r = 0; r < word.size(); ++r) {
    if (matches_injectively(rotated, pattern)) return true;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  }
  return false;
}

}  // namespace

TranspositionIdentityReport verify_transposition_identities(int m, int word_length) {
  if (m < 3) throw std::invalid_argument("transposition identities need m >= 3");
  if (word_length != 4 && word_length != 6 && word_length != 8)
    throw std::invalid_argument("word length must be 4, 6 or 8");
  std::vector<std::string_view> patterns;
  if (word_length == 6) patterns = {"ijijij"};
  if (word_length == 8) patterns = {"ijikijik", "ijikjijk"};

  TranspositionIdentityReport report;
  report.m = m;
  report.word_length = word_length;

  // Prefix products as one-line arrays; letter i acts as the transposition (1 i).
  std::vector<int> word(static_cast<std::size_t>(word_length));
  std::vector<std::vector<int>> prefix(static_cast<std::size_t>(word_length) + 1, std::vector<int>(m));
  std::iota(prefix[0].begin(), prefix[0].end(), 1);
  std::function<void(int)> dfs = [&](int t) {
    if (t == word_length) {
      ++report.words_checked;
      for (int x = 0; x < m; ++x)
        if (prefix[t][x] != x + 1) return;
      ++report.identity_words;
      if (has_cyclic_repeat(word)) {
        ++report.with_adjacent_repeat;
      } else if (std::any_of(patterns.begin(), patterns.end(),
                             [&](std::string_view p) { return matches_up_to_rotation(word, p); })) {
        ++report.matching_pattern;
      } else {
        report.exceptions.push_back(word);
      }
      return;
    }
    for (int i = 2; i <= m; ++i) {
      word[t] = i;
      // (prefix * (1 i))(x) = prefix((1 i)(x))
      prefix[t + 1] = prefix[t];
      std::swap(prefix[t + 1][0], prefix[t + 1][i - 1]);
      dfs(t + 1);
    }
  };
  dfs(0);
  return report;
}

}  // namespace vth
