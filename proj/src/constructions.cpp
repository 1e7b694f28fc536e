#include "vth/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace vth {

std::optional<RepeatedDifference> golomb_violation(std::span<const std::int64_t> marks) {
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i] < 0) throw std::invalid_argument("Golomb marks must be non-negative");
    if (i > 0 && marks[i] <= marks[i - 1]) throw std::invalid_argument("Golomb marks must be strictly increasing");
  }
  std::map<std::int64_t, std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < marks.size(); ++i)
    for (std::size_t j = i + 1; j < marks.size(); ++j) {
      const std::int64_t diff = marks[j] - marks[i];
      auto [it, fresh] = seen.emplace(diff, std::pair{i, j});
      if (!fresh) return RepeatedDifference{it->second.first, it->second.second, i, j, diff};
    }
  return std::nullopt;
}

bool is_golomb(std::span<const std::int64_t> marks) { return !golomb_violation(marks).has_value(); }

GolombRuler greedy_golomb(int d) {
  if (d < 1) throw std::invalid_argument("greedy_golomb needs d >= 1");
  GolombRuler r{{0}};
  std::set<std::int64_t> diffs;
  for (std::int64_t candidate = 1; static_cast<int>(r.marks.size()) < d; ++candidate) {
    std::vector<std::int64_t> fresh;
    bool ok = true;
    for (std::int64_t m : r.marks) {
      const std::int64_t diff = candidate - m;
      if (diffs.contains(diff)) {
        ok = false;
        break;
      }
      fresh.push_back(diff);
    }
    if (!ok) continue;
    diffs.insert(fresh.begin(), fresh.end());
    r.marks.push_back(candidate);
  }
  return r;
}

std::int64_t choose_modulus(const GolombRuler& ruler) {
  if (ruler.marks.empty()) throw std::invalid_argument("choose_modulus needs at least one mark");
  std::vector<std::int64_t> diffs;
  for (std::size_t i = 0; i < ruler.marks.size(); ++i)
    for (std::size_t j = i + 1; j < ruler.marks.size(); ++j) diffs.push_back(ruler.marks[j] - ruler.marks[i]);
  for (std::int64_t n = 2 * ruler.length() + 1;; ++n)
    if (std::all_of(diffs.begin(), diffs.end(), [n](std::int64_t x) { return std::gcd(n, x) == 1; })) return n;
}

std::vector<std::int64_t> progression_free(int d) {
  if (d < 1) throw std::invalid_argument("progression_free needs d >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; static_cast<int>(out.size()) < d; ++x) {
    std::int64_t y = x;
    bool binary_digits = true;
    for (; y > 0; y /= 3)
      if (y % 3 == 2) {
        binary_digits = false;
        break;
      }
    if (binary_digits) out.push_back(x + 1);
  }
  return out;
}

PartedComplex cyclic_extension(const SimplicialComplex& k, const GolombRuler& ruler, std::int64_t n) {
  const auto& vs = k.vertices();
  if (ruler.marks.size() != vs.size())
    throw std::invalid_argument("ruler has " + std::to_string(ruler.marks.size()) + " marks but K has " +
                                std::to_string(vs.size()) + " vertices");
  if (!is_golomb(ruler.marks)) throw std::invalid_argument("marks do not form a Golomb ruler");
  if (n <= 2 * ruler.length()) throw std::invalid_argument("modulus must exceed 2*a_d");
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (std::gcd(n, ruler.marks[j] - ruler.marks[i]) != 1)
        throw std::invalid_argument("modulus is not coprime to difference " +
                                    std::to_string(ruler.marks[j] - ruler.marks[i]));
  if (!is_connected(k)) throw std::invalid_argument("cyclic_extension needs a connected complex");

  std::map<Vertex, std::int64_t> mark_of;
  for (std::size_t i = 0; i < vs.size(); ++i) mark_of[vs[i]] = ruler.marks[i];

  PartedComplex out;
  std::vector<Simplex> faces;
  faces.reserve(static_cast<std::size_t>(n) * k.facets().size());
  for (std::int64_t x = 0; x < n; ++x) {
    for (const auto& f : k.facets()) {
      Simplex s;
      for (Vertex v : f) s.push_back((x + mark_of[v]) % n);
      faces.push_back(std::move(s));
    }
    std::vector<Vertex> part;
    for (std::int64_t a : ruler.marks) part.push_back((x + a) % n);
    out.parts.push_back(make_simplex(std::move(part)));
  }
  out.complex = SimplicialComplex::from_facets(std::move(faces));
  return out;
}

std::vector<Element> extension_connection_set(const Graph& h, const GroupPair& pair) {
  if (h.vertex_count() != pair.size())
    throw std::invalid_argument("graph has " + std::to_string(h.vertex_count()) + " vertices but D has " +
                                std::to_string(pair.size()) + " elements");
  const auto& g = pair.group();
  const auto& d = pair.distinguished();
  std::set<Element> s;
  for (const auto& [u, v] : h.edges()) {
    const auto& gu = d[h.position(u)];
    const auto& gv = d[h.position(v)];
    s.insert(g.multiply(g.inverse(gu), gv));
    s.insert(g.multiply(g.inverse(gv), gu));
  }
  return {s.begin(), s.end()};
}

PartedGraph group_extension_graph(const Graph& h, const GroupPair& pair) {
  if (h.vertex_count() != pair.size())
    throw std::invalid_argument("graph has " + std::to_string(h.vertex_count()) + " vertices but D has " +
                                std::to_string(pair.size()) + " elements");
  const auto& g = pair.group();
  const auto& d = pair.distinguished();
  const auto h_edges = h.edges();

  PartedGraph out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> vertices(static_cast<std::size_t>(g.order()));
  std::iota(vertices.begin(), vertices.end(), Vertex{0});
  for (std::int64_t idx = 0; idx < g.order(); ++idx) {
    const Element x = g.element_at(idx);
    std::vector<Vertex> image(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) image[i] = g.index(g.multiply(x, d[i]));
    for (const auto& [u, v] : h_edges) edges.emplace_back(image[h.position(u)], image[h.position(v)]);
    out.parts.push_back(make_simplex(std::move(image)));
  }
  out.graph = Graph(std::move(vertices), edges);
  return out;
}

namespace {

// Tomita-style pivoting over positions in g.vertices().
class MaximalCliques {
 public:
  explicit MaximalCliques(const Graph& g) : g_(g), n_(g.vertex_count()) {
    adj_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (Vertex w : g.neighbours(g.vertices()[i])) adj_[i].push_back(g.position(w));
  }

  std::vector<Simplex> run() {
    std::vector<std::size_t> p(n_);
    std::iota(p.begin(), p.end(), std::size_t{0});
    expand(p, {});
    return std::move(found_);
  }

 private:
  static std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  void expand(std::vector<std::size_t> p, std::vector<std::size_t> x) {
    if (p.empty()) {
      if (x.empty()) {
        Simplex s;
        for (std::size_t i : r_) s.push_back(g_.vertices()[i]);
        found_.push_back(make_simplex(std::move(s)));
      }
      return;
    }
    // Pivot maximizing |P ∩ N(u)|, first in vertex order on ties.
    std::size_t pivot = p.front();
    std::size_t best = 0;
    bool have = false;
    for (const auto* set : {&p, &x})
      for (std::size_t u : *set) {
        const std::size_t c = intersect(p, adj_[u]).size();
        if (!have || c > best) {
          pivot = u;
          best = c;
          have = true;
        }
      }
    std::vector<std::size_t> candidates;
    std::set_difference(p.begin(), p.end(), adj_[pivot].begin(), adj_[pivot].end(), std::back_inserter(candidates));
    for (std::size_t v : candidates) {
      r_.push_back(v);
      expand(intersect(p, adj_[v]), intersect(x, adj_[v]));
      r_.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> r_;
  std::vector<Simplex> found_;
};

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(what) + " requires a connected graph");
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  return SimplicialComplex::from_facets(MaximalCliques(g).run());
}

SimplicialComplex open_neighbourhood_complex(const Graph& g) {
  require_connected(g, "open neighbourhood complex");
  std::vector<Simplex> candidates;
  for (Vertex v : g.vertices()) candidates.push_back(g.neighbours(v));
  return SimplicialComplex::from_facets(std::move(candidates));
}

SimplicialComplex closed_neighbourhood_complex(const Graph& g) {
  require_connected(g, "closed neighbourhood complex");
  std::vector<Simplex> candidates;
  for (Vertex v : g.vertices()) {
    Simplex s = g.neighbours(v);
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    candidates.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(std::move(candidates));
}

Graph power_cycle(int n, int r) {
  if (r < 1 || n < 2 * r + 1) throw std::invalid_argument("power_cycle needs r >= 1 and n >= 2r+1");
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), Vertex{0});
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int x = 0; x < n; ++x)
    for (int s = 1; s <= r; ++s) edges.emplace_back(x, (x + s) % n);
  return Graph(std::move(vs), edges);
}

Graph cycle_graph(int n) { return power_cycle(n, 1); }

SimplicialComplex k_family_complex(int k) {
  if (k < 1) throw std::invalid_argument("k_family_complex needs k >= 1");
  const int n = 4 * k + 2;
  std::vector<Simplex> faces;
  for (int x = 0; x < n; ++x) {
    Simplex s;
    for (int offset : {0, 1, 2, 4, 2 * k + 4}) s.push_back((x + offset) % n);
    faces.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(std::move(faces));
}

SimplicialComplex rp2_six_vertex() {
  return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                         {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

}  // namespace vth
