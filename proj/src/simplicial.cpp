#include "vth/simplicial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

#include "vth/errors.hpp"

namespace vth {

Simplex make_simplex(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> candidate_faces) {
  for (auto& f : candidate_faces) f = make_simplex(std::move(f));
  std::erase_if(candidate_faces, [](const Simplex& f) { return f.empty(); });
  std::sort(candidate_faces.begin(), candidate_faces.end());
  candidate_faces.erase(std::unique(candidate_faces.begin(), candidate_faces.end()),
                        candidate_faces.end());
  // Larger candidates first, so a candidate can only be absorbed by one
  // already kept.
  std::stable_sort(candidate_faces.begin(), candidate_faces.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });

  SimplicialComplex k;
  std::map<Vertex, std::vector<std::size_t>> star;
  for (auto& c : candidate_faces) {
    bool absorbed = false;
    if (auto it = star.find(c.front()); it != star.end()) {
      for (std::size_t idx : it->second) {
        if (k.facets_[idx].size() > c.size() && is_subset(c, k.facets_[idx])) {
          absorbed = true;
          break;
        }
      }
    }
    if (absorbed) continue;
    for (Vertex v : c) star[v].push_back(k.facets_.size());
    k.facets_.push_back(std::move(c));
  }
  std::sort(k.facets_.begin(), k.facets_.end());
  k.vertices_.reserve(star.size());
  for (const auto& [v, _] : star) k.vertices_.push_back(v);
  return k;
}

int SimplicialComplex::dimension() const {
  std::size_t best = 0;
  for (const auto& f : facets_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

bool SimplicialComplex::contains_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::contains_face(std::span<const Vertex> face) const {
  if (face.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return is_subset(face, f); });
}

std::size_t SimplicialComplex::default_face_cap() {
  if (const char* env = std::getenv("THCAP_FACES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("THCAP_FACES is not a non-negative integer: " + std::string(env));
    }
  }
  return std::size_t{1} << 20;
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces(std::size_t cap) const {
  const int dim = dimension();
  std::vector<std::vector<Simplex>> out(static_cast<std::size_t>(dim + 1));
  if (dim < 0) return out;
  if (dim > 40) throw CapExceeded("facet of dimension " + std::to_string(dim) + " is too large to expand");

  std::size_t raw = 0;
  for (const auto& f : facets_) {
    raw += (std::size_t{1} << f.size()) - 1;
    if (raw > cap * 64 + 64) throw CapExceeded("face enumeration exceeds cap " + std::to_string(cap));
  }
  for (const auto& f : facets_) {
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Simplex s;
      s.reserve(static_cast<std::size_t>(__builtin_popcountll(mask)));
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) s.push_back(f[i]);
      out[s.size() - 1].push_back(std::move(s));
    }
  }
  std::size_t total = 0;
  for (auto& layer : out) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    total += layer.size();
  }
  if (total > cap)
    throw CapExceeded("complex has " + std::to_string(total) + " faces, cap is " + std::to_string(cap));
  return out;
}

std::vector<std::size_t> SimplicialComplex::face_counts(std::size_t cap) const {
  std::vector<std::size_t> counts;
  for (const auto& layer : faces(cap)) counts.push_back(layer.size());
  return counts;
}

Graph::Graph(std::vector<Vertex> vertices, std::span<const std::pair<Vertex, Vertex>> edges) {
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph loop at vertex " + std::to_string(u));
    vertices.push_back(u);
    vertices.push_back(v);
  }
  vertices_ = make_simplex(std::move(vertices));
  adjacency_.resize(vertices_.size());
  for (const auto& [u, v] : edges) {
    adjacency_[position(u)].push_back(v);
    adjacency_[position(v)].push_back(u);
  }
  for (auto& nbrs : adjacency_) nbrs = make_simplex(std::move(nbrs));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (Vertex w : adjacency_[i])
      if (vertices_[i] < w) out.emplace_back(vertices_[i], w);
  return out;
}

bool Graph::contains_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Graph::position(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw std::invalid_argument("unknown graph vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = neighbours(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<Vertex>& Graph::neighbours(Vertex v) const { return adjacency_[position(v)]; }

namespace {

std::vector<Vertex> checked_subset(std::span<const Vertex> subset, const std::vector<Vertex>& known) {
  auto s = make_simplex({subset.begin(), subset.end()});
  for (Vertex v : s)
    if (!std::binary_search(known.begin(), known.end(), v))
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the vertex set");
  return s;
}

}  // namespace

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> subset) {
  const auto s = checked_subset(subset, k.vertices());
  std::vector<Simplex> traces;
  for (const auto& f : k.facets()) {
    Simplex t;
    std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(t));
    if (!t.empty()) traces.push_back(std::move(t));
  }
  return SimplicialComplex::from_facets(std::move(traces));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  auto s = checked_subset(subset, g.vertices());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : s)
    for (Vertex w : g.neighbours(u))
      if (u < w && std::binary_search(s.begin(), s.end(), w)) edges.emplace_back(u, w);
  return Graph(std::move(s), edges);
}

SimplicialComplex relabel(const SimplicialComplex& k, std::span<const Vertex> from,
                          std::span<const Vertex> to) {
  if (from.size() != to.size()) throw std::invalid_argument("relabel: map arrays differ in length");
  std::map<Vertex, Vertex> map;
  for (std::size_t i = 0; i < from.size(); ++i) map.emplace(from[i], to[i]);
  std::vector<Simplex> image;
  for (const auto& f : k.facets()) {
    Simplex s;
    for (Vertex v : f) {
      auto it = map.find(v);
      if (it == map.end()) throw std::invalid_argument("relabel: vertex " + std::to_string(v) + " unmapped");
      s.push_back(it->second);
    }
    image.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(std::move(image));
}

Graph one_skeleton(const SimplicialComplex& k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) edges.emplace_back(f[i], f[j]);
  return Graph(k.vertices(), edges);
}

std::vector<Simplex> barycentric_vertices(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  for (auto& layer : k.faces())
    for (auto& s : layer) out.push_back(std::move(s));
  return out;
}

Graph barycentric_1skeleton(const SimplicialComplex& k) {
  const auto nodes = barycentric_vertices(k);
  std::vector<Vertex> ids(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) ids[i] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  // nodes are ordered by dimension, so a proper superset comes later.
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[j].size() > nodes[i].size() && is_subset(nodes[i], nodes[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(std::move(ids), edges);
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  if (k2.empty()) return k1;
  if (k1.empty()) return k2;
  const Vertex shift = k1.vertices().back() + 1 - k2.vertices().front();
  std::vector<Simplex> facets;
  facets.reserve(k1.facets().size() * k2.facets().size());
  for (const auto& f1 : k1.facets())
    for (const auto& f2 : k2.facets()) {
      Simplex s = f1;
      for (Vertex v : f2) s.push_back(v + shift);
      facets.push_back(std::move(s));
    }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex t_fold_join(const SimplicialComplex& k, int t) {
  if (t < 0) throw std::invalid_argument("t_fold_join: negative t");
  SimplicialComplex out;
  for (int i = 0; i < t; ++i) out = join(out, k);
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const auto& vs = g.vertices();
  std::vector<char> seen(vs.size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t start = 0; start < vs.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> comp;
    std::queue<std::size_t> todo;
    todo.push(start);
    seen[start] = 1;
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      comp.push_back(vs[i]);
      for (Vertex w : g.neighbours(vs[i])) {
        const std::size_t j = g.position(w);
        if (!seen[j]) {
          seen[j] = 1;
          todo.push(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k) {
  return connected_components(one_skeleton(k));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }
bool is_connected(const SimplicialComplex& k) { return connected_components(k).size() <= 1; }

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  std::int64_t sign = 1;
  for (std::size_t c : k.face_counts()) {
    chi += sign * static_cast<std::int64_t>(c);
    sign = -sign;
  }
  return chi;
}

}  // namespace vth
