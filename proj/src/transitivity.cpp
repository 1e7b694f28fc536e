#include "vth/transitivity.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace vth {

namespace {

std::size_t domain_position(const std::vector<Vertex>& domain, Vertex v) {
  auto it = std::lower_bound(domain.begin(), domain.end(), v);
  if (it == domain.end() || *it != v) throw std::invalid_argument("vertex " + std::to_string(v) + " outside the action's domain");
  return static_cast<std::size_t>(it - domain.begin());
}

void require_domain(const std::vector<Vertex>& vertices, const GroupAction& action) {
  if (vertices != action.domain) throw std::invalid_argument("action domain differs from the vertex set");
}

Simplex image(const GroupAction& action, std::size_t element, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(action.apply(element, v));
  return make_simplex(std::move(out));
}

// Closure of {seed} under all listed elements.
template <class T, class F>
std::set<T> orbit(const T& seed, std::size_t elements, F&& apply) {
  std::set<T> seen{seed};
  std::queue<T> todo;
  todo.push(seed);
  while (!todo.empty()) {
    const T x = todo.front();
    todo.pop();
    for (std::size_t g = 0; g < elements; ++g) {
      T y = apply(g, x);
      if (seen.insert(y).second) todo.push(std::move(y));
    }
  }
  return seen;
}

}  // namespace

GroupAction GroupAction::from_group(const FiniteGroup& group, std::vector<Vertex> domain,
                                    const std::function<Vertex(const Element&, Vertex)>& act) {
  GroupAction a;
  a.domain = make_simplex(std::move(domain));
  for (const auto& g : group.elements()) {
    std::vector<Vertex> img;
    img.reserve(a.domain.size());
    for (Vertex v : a.domain) {
      const Vertex w = act(g, v);
      domain_position(a.domain, w);
      img.push_back(w);
    }
    a.images.push_back(std::move(img));
    a.labels.push_back(group.label(g));
  }
  return a;
}

GroupAction GroupAction::from_permutations(std::vector<Vertex> domain, std::vector<std::vector<Vertex>> images,
                                           std::vector<std::string> labels) {
  GroupAction a;
  a.domain = std::move(domain);
  if (!std::is_sorted(a.domain.begin(), a.domain.end()) ||
      std::adjacent_find(a.domain.begin(), a.domain.end()) != a.domain.end())
    throw std::invalid_argument("action domain must be strictly increasing");
  for (const auto& img : images) {
    if (img.size() != a.domain.size()) throw std::invalid_argument("permutation has the wrong length");
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != a.domain) throw std::invalid_argument("image is not a permutation of the domain");
  }
  a.images = std::move(images);
  a.labels = std::move(labels);
  if (a.labels.empty())
    for (std::size_t i = 0; i < a.images.size(); ++i) a.labels.push_back("g" + std::to_string(i));
  return a;
}

Vertex GroupAction::apply(std::size_t element, Vertex v) const {
  return images.at(element)[domain_position(domain, v)];
}

GroupAction translation_action(std::int64_t n) {
  std::vector<Vertex> domain(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) domain[static_cast<std::size_t>(i)] = i;
  return GroupAction::from_group(FiniteGroup::cyclic(static_cast<int>(n)), domain,
                                 [n](const Element& g, Vertex v) { return (v + g.coords[0]) % n; });
}

GroupAction left_multiplication_action(const Subgroup& h, std::span<const Element> by) {
  const auto& g = h.ambient;
  GroupAction a;
  a.domain = h.indices();
  for (const auto& x : by) {
    std::vector<Vertex> img;
    img.reserve(a.domain.size());
    for (const auto& y : h.elements) {
      const Vertex v = g.index(g.multiply(x, y));
      domain_position(a.domain, v);
      img.push_back(v);
    }
    a.images.push_back(std::move(img));
    a.labels.push_back(g.label(x));
  }
  return a;
}

GroupAction left_multiplication_action(const Subgroup& h) { return left_multiplication_action(h, h.elements); }

bool satisfies_action_laws(const FiniteGroup& group, const GroupAction& action) {
  const auto elements = group.elements();
  if (action.images.size() != elements.size()) return false;
  const std::size_t e = static_cast<std::size_t>(group.index(group.identity()));
  if (action.images[e] != action.domain) return false;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const auto ab = static_cast<std::size_t>(group.index(group.multiply(elements[a], elements[b])));
      for (Vertex v : action.domain)
        if (action.apply(ab, v) != action.apply(a, action.apply(b, v))) return false;
    }
  return true;
}

bool verify_simplicial_action(const SimplicialComplex& k, const GroupAction& action) {
  require_domain(k.vertices(), action);
  for (std::size_t g = 0; g < action.images.size(); ++g)
    for (const auto& f : k.facets())
      if (!k.contains_face(image(action, g, f))) return false;
  return true;
}

bool verify_graph_action(const Graph& g, const GroupAction& action) {
  require_domain(g.vertices(), action);
  for (std::size_t e = 0; e < action.images.size(); ++e)
    for (const auto& [u, v] : g.edges())
      if (!g.adjacent(action.apply(e, u), action.apply(e, v))) return false;
  return true;
}

bool is_vertex_transitive(const SimplicialComplex& k, const GroupAction& action) {
  require_domain(k.vertices(), action);
  if (k.vertices().empty()) return true;
  return orbit(k.vertices().front(), action.images.size(),
               [&](std::size_t g, Vertex v) { return action.apply(g, v); })
             .size() == k.vertices().size();
}

bool is_vertex_transitive(const Graph& gr, const GroupAction& action) {
  require_domain(gr.vertices(), action);
  if (gr.vertices().empty()) return true;
  return orbit(gr.vertices().front(), action.images.size(),
               [&](std::size_t g, Vertex v) { return action.apply(g, v); })
             .size() == gr.vertices().size();
}

bool is_facet_transitive(const SimplicialComplex& k, const GroupAction& action) {
  require_domain(k.vertices(), action);
  if (k.facets().empty()) return true;
  const auto reached = orbit(k.facets().front(), action.images.size(),
                             [&](std::size_t g, const Simplex& s) { return image(action, g, s); });
  const std::set<Simplex> facets(k.facets().begin(), k.facets().end());
  return reached == facets;
}

LefschetzVerdict lefschetz_obstruction(const HomologyProfile& profile) {
  const auto t = profile.trimmed();
  // A point's profile is (Z). Torsion only matters for this test: RP^2 has
  // the rational homology of a point but is not one.
  const bool point = t.groups.size() == 1 && t[0].betti == 1 && t[0].torsion.empty();
  if (point) return LefschetzVerdict::not_applicable;
  for (const auto& g : t.groups)
    if (g.betti > 1) return LefschetzVerdict::not_applicable;
  return t.euler_characteristic() % 2 != 0 ? LefschetzVerdict::obstructed : LefschetzVerdict::not_applicable;
}

std::string to_string(LefschetzVerdict v) {
  return v == LefschetzVerdict::obstructed ? "obstructed" : "not_applicable";
}

}  // namespace vth
