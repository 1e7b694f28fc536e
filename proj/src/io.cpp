#include "vth/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace vth::io {

namespace {

json required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

void check_label(const json& label) {
  if (!label.is_number_integer() && !label.is_string())
    throw std::invalid_argument("vertex labels must be integers or strings, got " + label.dump());
}

// Decides the labelling from the "vertices" array.
VertexLabels labels_for(const json& vertices) {
  if (!vertices.is_array()) throw std::invalid_argument("\"vertices\" must be an array");
  bool all_int = true;
  for (const auto& v : vertices) {
    check_label(v);
    all_int = all_int && v.is_number_integer();
  }
  VertexLabels out;
  if (all_int) {
    std::vector<Vertex> ids;
    for (const auto& v : vertices) ids.push_back(v.get<Vertex>());
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      throw std::invalid_argument("duplicate vertex label");
    return out;
  }
  for (const auto& v : vertices) {
    if (std::find(out.names.begin(), out.names.end(), v) != out.names.end())
      throw std::invalid_argument("duplicate vertex label " + v.dump());
    out.names.push_back(v);
  }
  return out;
}

std::vector<Vertex> vertex_ids(const json& vertices, const VertexLabels& labels) {
  std::vector<Vertex> ids;
  for (const auto& v : vertices) ids.push_back(labels.id(v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

Vertex listed_id(const json& label, const VertexLabels& labels, const std::vector<Vertex>& listed) {
  check_label(label);
  const Vertex id = labels.id(label);
  if (!std::binary_search(listed.begin(), listed.end(), id))
    throw std::invalid_argument("label " + label.dump() + " is not among the vertices");
  return id;
}

}  // namespace

json VertexLabels::name(Vertex v) const {
  if (identity()) return v;
  if (v < 0 || static_cast<std::size_t>(v) >= names.size()) throw std::out_of_range("no label for vertex id " + std::to_string(v));
  return names[static_cast<std::size_t>(v)];
}

Vertex VertexLabels::id(const json& label) const {
  if (identity()) {
    if (!label.is_number_integer()) throw std::invalid_argument("expected an integer label, got " + label.dump());
    return label.get<Vertex>();
  }
  auto it = std::find(names.begin(), names.end(), label);
  if (it == names.end()) throw std::invalid_argument("unknown vertex label " + label.dump());
  return static_cast<Vertex>(it - names.begin());
}

ComplexFile read_complex(const json& j) {
  const json vertices = required(j, "vertices");
  const json facets = required(j, "facets");
  ComplexFile out;
  out.labels = labels_for(vertices);
  const auto listed = vertex_ids(vertices, out.labels);
  if (!facets.is_array()) throw std::invalid_argument("\"facets\" must be an array");
  std::vector<Simplex> candidates;
  for (const auto& f : facets) {
    if (!f.is_array() || f.empty()) throw std::invalid_argument("facets must be nonempty arrays");
    Simplex s;
    for (const auto& v : f) s.push_back(listed_id(v, out.labels, listed));
    const std::size_t before = s.size();
    s = make_simplex(std::move(s));
    if (s.size() != before) throw std::invalid_argument("facet " + f.dump() + " repeats a vertex");
    candidates.push_back(std::move(s));
  }
  // Listed vertices that occur in no facet become 0-dimensional facets.
  for (Vertex v : listed) candidates.push_back({v});
  out.complex = SimplicialComplex::from_facets(std::move(candidates));
  return out;
}

json write_complex(const SimplicialComplex& k, const VertexLabels& labels) {
  json vertices = json::array();
  for (Vertex v : k.vertices()) vertices.push_back(labels.name(v));
  json facets = json::array();
  for (const auto& f : k.facets()) {
    json row = json::array();
    for (Vertex v : f) row.push_back(labels.name(v));
    facets.push_back(std::move(row));
  }
  return json{{"vertices", std::move(vertices)}, {"facets", std::move(facets)}};
}

GraphFile read_graph(const json& j) {
  const json vertices = required(j, "vertices");
  const json edges = required(j, "edges");
  GraphFile out;
  out.labels = labels_for(vertices);
  const auto listed = vertex_ids(vertices, out.labels);
  if (!edges.is_array()) throw std::invalid_argument("\"edges\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be pairs, got " + e.dump());
    pairs.emplace_back(listed_id(e[0], out.labels, listed), listed_id(e[1], out.labels, listed));
  }
  out.graph = Graph(listed, pairs);
  return out;
}

json write_graph(const Graph& g, const VertexLabels& labels) {
  json vertices = json::array();
  for (Vertex v : g.vertices()) vertices.push_back(labels.name(v));
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({labels.name(u), labels.name(v)}));
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json write_profile(const HomologyProfile& p) {
  json groups = json::array();
  for (const auto& g : p.groups) groups.push_back(json{{"betti", g.betti}, {"torsion", g.torsion}});
  return json{{"H", std::move(groups)}};
}

HomologyProfile read_profile(const json& j) {
  const json groups = required(j, "H");
  if (!groups.is_array()) throw std::invalid_argument("\"H\" must be an array");
  HomologyProfile p;
  for (const auto& g : groups) {
    HomologyGroup h;
    h.betti = required(g, "betti").get<std::int64_t>();
    if (h.betti < 0) throw std::invalid_argument("negative Betti number");
    if (g.contains("torsion")) h.torsion = g.at("torsion").get<std::vector<std::int64_t>>();
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
      if (h.torsion[i] < 2) throw std::invalid_argument("torsion coefficients must exceed 1");
      if (i > 0 && h.torsion[i] % h.torsion[i - 1] != 0)
        throw std::invalid_argument("torsion coefficients must form a divisibility chain");
    }
    p.groups.push_back(std::move(h));
  }
  return p;
}

json cluster_report(const ClusterCheck& check) {
  json j{{"valid", check.valid}, {"violations", check.violations}, {"cluster_girth", nullptr}, {"l", nullptr}};
  j["k"] = check.decomposition ? check.decomposition->parts.size() : 0;
  if (check.decomposition) {
    const auto girth = cluster_girth(*check.decomposition);
    j["cluster_girth"] = girth ? json(*girth) : json("inf");
    try {
      j["l"] = wedge_circle_count(*check.decomposition);
    } catch (const std::invalid_argument& e) {
      j["violations"].push_back(e.what());
    }
  }
  return j;
}

GroupAction read_action(const json& j, const std::vector<Vertex>& domain, const VertexLabels& labels) {
  const json gens = required(j, "generators");
  if (!gens.is_object()) throw std::invalid_argument("\"generators\" must be an object");
  std::vector<std::vector<Vertex>> images;
  std::vector<std::string> names;
  for (const auto& [name, perm] : gens.items()) {
    if (!perm.is_array() || perm.size() != domain.size())
      throw std::invalid_argument("generator " + name + " must list one image per vertex");
    std::vector<Vertex> img;
    for (const auto& v : perm) {
      check_label(v);
      img.push_back(labels.id(v));
    }
    images.push_back(std::move(img));
    names.push_back(name);
  }
  return GroupAction::from_permutations(domain, std::move(images), std::move(names));
}

json write_action(const GroupAction& a, const VertexLabels& labels) {
  json gens = json::object();
  for (std::size_t g = 0; g < a.images.size(); ++g) {
    json img = json::array();
    for (Vertex v : a.images[g]) img.push_back(labels.name(v));
    gens[a.labels.at(g)] = std::move(img);
  }
  return json{{"generators", std::move(gens)}};
}

GroupPair read_pair(const json& j) {
  FiniteGroup g = FiniteGroup::parse(required(j, "group").get<std::string>());
  std::vector<Element> d;
  for (const auto& e : required(j, "D")) {
    if (e.is_string()) d.push_back(g.parse_label(e.get<std::string>()));
    else d.push_back(g.parse_label(e.dump()));
  }
  return GroupPair(std::move(g), std::move(d));
}

json write_pair(const GroupPair& pair) {
  json d = json::array();
  for (const auto& e : pair.distinguished()) d.push_back(pair.group().label(e));
  return json{{"group", pair.group().spec()}, {"D", std::move(d)}};
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace vth::io
