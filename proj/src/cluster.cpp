#include "vth/cluster.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "vth/errors.hpp"

namespace vth {

namespace {

std::string describe(std::span<const Vertex> s) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "}";
  return out.str();
}

// vertex -> indices of the parts containing it
std::map<Vertex, std::vector<std::size_t>> membership(std::span<const std::vector<Vertex>> parts) {
  std::map<Vertex, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex v : parts[i]) out[v].push_back(i);
  return out;
}

// Shared checks: parts are valid subsets, cells lie in a part, overlaps <= 1.
template <class Cells>
ClusterCheck check_common(const std::vector<Vertex>& host_vertices, const Cells& cells,
                          std::span<const std::vector<Vertex>> parts) {
  ClusterCheck result;
  std::vector<std::vector<Vertex>> normalized;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto p = make_simplex(parts[i]);
    if (p.empty()) result.violations.push_back("part " + std::to_string(i) + " is empty");
    for (Vertex v : p)
      if (!std::binary_search(host_vertices.begin(), host_vertices.end(), v))
        result.violations.push_back("part " + std::to_string(i) + " contains unknown vertex " + std::to_string(v));
    normalized.push_back(std::move(p));
  }
  const auto members = membership(normalized);

  for (const auto& cell : cells) {
    auto it = members.find(cell.front());
    const bool covered = it != members.end() &&
        std::any_of(it->second.begin(), it->second.end(),
                    [&](std::size_t i) { return is_subset(cell, normalized[i]); });
    if (!covered) result.violations.push_back("uncovered " + describe(cell));
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Vertex>> overlaps;
  for (const auto& [v, ps] : members)
    for (std::size_t a = 0; a < ps.size(); ++a)
      for (std::size_t b = a + 1; b < ps.size(); ++b) overlaps[{ps[a], ps[b]}].push_back(v);
  for (const auto& [pair, common] : overlaps)
    if (common.size() >= 2)
      result.violations.push_back("parts " + std::to_string(pair.first) + " and " + std::to_string(pair.second) +
                                  " share " + describe(common));

  result.valid = result.violations.empty();
  if (result.valid) {
    ClusterDecomposition d;
    d.summary = shape_summary(normalized);
    d.parts = std::move(normalized);
    result.decomposition = std::move(d);
  }
  return result;
}

}  // namespace

std::vector<Vertex> ClusterDecomposition::host_vertices() const {
  return std::visit([](const auto& h) { return h.vertices(); }, host);
}

ClusterCheck check_cluster(const SimplicialComplex& host, std::span<const std::vector<Vertex>> parts) {
  auto result = check_common(host.vertices(), host.facets(), parts);
  if (result.decomposition) result.decomposition->host = host;
  return result;
}

ClusterCheck check_cluster(const Graph& host, std::span<const std::vector<Vertex>> parts) {
  std::vector<std::vector<Vertex>> cells;
  for (Vertex v : host.vertices())
    if (host.neighbours(v).empty()) cells.push_back({v});
  for (const auto& [u, v] : host.edges()) cells.push_back({u, v});
  auto result = check_common(host.vertices(), cells, parts);
  if (result.decomposition) result.decomposition->host = host;
  return result;
}

namespace {

template <class Host>
ClusterDecomposition verify_impl(const Host& host, std::span<const std::vector<Vertex>> parts) {
  auto check = check_cluster(host, parts);
  if (!check.valid) {
    std::string msg = "not a cluster:";
    for (std::size_t i = 0; i < check.violations.size() && i < 10; ++i) msg += " " + check.violations[i] + ";";
    if (check.violations.size() > 10) msg += " ...";
    throw VerificationError(msg);
  }
  return std::move(*check.decomposition);
}

}  // namespace

ClusterDecomposition verify_cluster(const SimplicialComplex& host, std::span<const std::vector<Vertex>> parts) {
  return verify_impl(host, parts);
}

ClusterDecomposition verify_cluster(const Graph& host, std::span<const std::vector<Vertex>> parts) {
  return verify_impl(host, parts);
}

ShapeSummary shape_summary(std::span<const std::vector<Vertex>> parts) {
  ShapeSummary s;
  s.k = parts.size();
  std::vector<std::size_t> root(parts.size());
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [v, ps] : membership(parts)) {
    if (ps.size() < 2) continue;
    s.shared_vertices[v] = ps.size();
    s.incidence_edge_count += ps.size();
    for (std::size_t i = 1; i < ps.size(); ++i) root[find(ps[i])] = find(ps[0]);
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (find(i) == i) ++s.component_count;
  return s;
}

std::optional<std::size_t> cluster_girth(std::span<const std::vector<Vertex>> parts) {
  // Bipartite incidence graph: nodes [0, k) are parts, [k, k + #shared) are
  // shared vertices. Unshared vertices are leaves and lie on no cycle.
  const auto members = membership(parts);
  const std::size_t k = parts.size();
  std::vector<std::vector<std::size_t>> adj(k);
  for (const auto& [v, ps] : members) {
    if (ps.size() < 2) continue;
    const std::size_t node = adj.size();
    adj.emplace_back();
    for (std::size_t p : ps) {
      adj[node].push_back(p);
      adj[p].push_back(node);
    }
  }
  const std::size_t n = adj.size();
  std::size_t best = SIZE_MAX;
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[root] = 0;
    parent[root] = SIZE_MAX;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t u = todo.front();
      todo.pop();
      if (2 * dist[u] >= best) break;
      for (std::size_t w : adj[u]) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          todo.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == SIZE_MAX) return std::nullopt;
  if (best < 6) throw std::invalid_argument("parts overlap in two vertices; not a cluster");
  return best / 2;
}

std::size_t wedge_circle_count(const ShapeSummary& s) {
  const std::size_t vertices = s.k + s.shared_vertices.size();
  return s.incidence_edge_count + s.component_count - vertices;
}

std::size_t wedge_circle_count(const ClusterDecomposition& d) {
  std::visit([&](const auto& host) {
    if (!is_connected(host)) throw std::invalid_argument("wedge_circle_count needs a connected host");
    for (const auto& part : d.parts) {
      if (!is_connected([&] {
            if constexpr (std::is_same_v<std::decay_t<decltype(host)>, Graph>) return induced_subgraph(host, part);
            else return induced_subcomplex(host, part);
          }()))
        throw std::invalid_argument("wedge_circle_count needs connected parts; part " + describe(part) + " is not");
    }
  }, d.host);
  return wedge_circle_count(d.summary);
}

}  // namespace vth
