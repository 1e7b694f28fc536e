#include "vth/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "vth/cluster.hpp"
#include "vth/constructions.hpp"
#include "vth/errors.hpp"
#include "vth/groups.hpp"
#include "vth/io.hpp"
#include "vth/morse.hpp"
#include "vth/transitivity.hpp"

namespace vth {

namespace {

using nlohmann::json;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add(PipelineReport& r, std::string name, bool pass, std::string detail = {}) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

std::string describe(const HomologySelfCheck& c) {
  std::string out;
  auto note = [&](bool ok, const char* what) {
    if (!ok) out += (out.empty() ? "" : ", ") + std::string(what);
  };
  note(c.boundary_squares_to_zero, "boundary^2 != 0");
  note(c.euler_consistent, "Euler characteristic mismatch");
  note(c.mod2_consistent, "mod 2 ranks disagree");
  note(c.mod3_consistent, "mod 3 ranks disagree");
  note(c.relabel_invariant, "relabeling changed homology");
  return out;
}

std::string compare(const HomologyProfile& computed, const HomologyProfile& predicted) {
  if (computed == predicted) return computed.to_tuple_string();
  return "computed " + computed.to_tuple_string() + ", predicted " + predicted.to_tuple_string();
}

std::int64_t factorial_times(int k, std::int64_t m, std::int64_t limit) {
  std::int64_t acc = m;
  for (int i = 2; i <= k; ++i) {
    if (acc > limit / i) return limit + 1;
    acc *= i;
  }
  return acc;
}

// Computes the profile of `c`, compares it to the prediction and runs the
// engine self-checks. Returns the profile.
HomologyProfile check_homology(PipelineReport& r, const std::string& name, const SimplicialComplex& c,
                               const PipelineOptions& opts) {
  HomologyProfile h = homology(c, opts.face_cap);
  r.computed.emplace_back(name, h);
  add(r, "homology:" + name, h == r.predicted, compare(h, r.predicted));
  if (opts.self_checks) {
    const auto sc = homology_self_check(c, h);
    add(r, "self_check:" + name, sc.all(), describe(sc));
  }
  const auto verdict = lefschetz_obstruction(h);
  add(r, "lefschetz_guard:" + name, verdict == LefschetzVerdict::not_applicable, to_string(verdict));
  return h;
}

}  // namespace

bool PipelineReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* PipelineReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json PipelineReport::to_json() const {
  json checks_j = json::array();
  for (const auto& c : checks) checks_j.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json computed_j = json::object();
  for (const auto& [name, p] : computed) computed_j[name] = io::write_profile(p);
  return json{{"kind", kind},
              {"parameters", parameters},
              {"n", n},
              {"l", l},
              {"cluster_girth", cluster_girth ? json(*cluster_girth) : json("inf")},
              {"base", io::write_profile(base)},
              {"predicted", io::write_profile(predicted)},
              {"predicted_tuple", predicted.to_tuple_string()},
              {"computed", computed_j},
              {"checks", checks_j},
              {"verdict", pass() ? "pass" : "fail"},
              {"wall_seconds", wall_seconds}};
}

PipelineReport pipeline_cyclic(const SimplicialComplex& k, const PipelineOptions& opts) {
  if (k.empty()) throw std::invalid_argument("the input complex is empty");
  if (!is_connected(k)) throw std::invalid_argument("the input complex is disconnected");
  const Stopwatch clock;
  PipelineReport r;
  r.kind = "cyclic";

  const GolombRuler ruler = greedy_golomb(static_cast<int>(k.vertex_count()));
  const std::int64_t n = choose_modulus(ruler);
  r.n = n;
  r.parameters = json{{"ruler", ruler.marks}, {"modulus", n}, {"complex", io::write_complex(k)}};
  add(r, "golomb", is_golomb(ruler.marks));

  const PartedComplex ext = cyclic_extension(k, ruler, n);
  const ClusterCheck cc = check_cluster(ext.complex, ext.parts);
  add(r, "cluster", cc.valid, cc.valid ? std::to_string(ext.parts.size()) + " parts" : cc.violations.front());
  if (!cc.valid) {
    r.wall_seconds = clock.seconds();
    return r;
  }
  const auto& decomp = *cc.decomposition;
  r.cluster_girth = cluster_girth(decomp);
  r.l = static_cast<std::int64_t>(wedge_circle_count(decomp));

  // Part x is the image of k under v_i -> x + a_i.
  bool iso = true;
  const auto& from = k.vertices();
  for (std::int64_t x = 0; x < n && iso; ++x) {
    std::vector<Vertex> to;
    for (std::int64_t a : ruler.marks) to.push_back((x + a) % n);
    const SimplicialComplex image = relabel(k, from, to);
    iso = induced_subcomplex(ext.complex, image.vertices()) == image;
  }
  add(r, "parts_isomorphic", iso);

  r.base = homology(k, opts.face_cap);
  r.predicted = wedge_prediction(r.base, n, r.l);
  check_homology(r, "extension", ext.complex, opts);

  const GroupAction shift = translation_action(n);
  const bool acts = verify_simplicial_action(ext.complex, shift);
  add(r, "translation_action", acts && is_vertex_transitive(ext.complex, shift),
      acts ? "Z/" + std::to_string(n) + " acts vertex-transitively" : "translation is not simplicial");

  r.wall_seconds = clock.seconds();
  return r;
}

PipelineReport pipeline_cayley(const SimplicialComplex& k, const CayleyOptions& opts) {
  if (k.empty()) throw std::invalid_argument("the input complex is empty");
  if (!is_connected(k)) throw std::invalid_argument("the input complex is disconnected");
  const Stopwatch clock;
  PipelineReport r;
  r.kind = "cayley";

  const Graph h = barycentric_1skeleton(k);
  const int d = static_cast<int>(h.vertex_count());
  const std::vector<std::int64_t> marks = opts.marks.empty() ? progression_free(d) : opts.marks;
  if (static_cast<int>(marks.size()) != d)
    throw std::invalid_argument("need " + std::to_string(d) + " progression-free marks, got " +
                                std::to_string(marks.size()));
  const int m = opts.modulus.value_or(static_cast<int>(4 * marks.back() + 1));
  const std::int64_t order = factorial_times(d + 1, m, opts.element_cap);
  if (order > opts.element_cap)
    throw CapExceeded("group Sigma_" + std::to_string(d + 1) + " x Z/" + std::to_string(m) + " exceeds the element cap of " +
                      std::to_string(opts.element_cap) + "; try a complex with fewer faces");

  const GroupPair pair = gamma_d_pair(marks, m);
  const FiniteGroup& group = pair.group();
  const char* mode = opts.mode == CayleyMode::clique ? "clique" : opts.mode == CayleyMode::closed ? "closed" : "both";
  r.parameters = json{{"complex", io::write_complex(k)}, {"marks", marks}, {"modulus", m}, {"mode", mode},
                      {"pair", io::write_pair(pair)},
                      {"g4_search", opts.exhaustive_g4 ? "exhaustive" : "pruned"}};

  const auto witness = satisfies_G(pair, 4, opts.exhaustive_g4 ? RSearch::exhaustive : RSearch::pruned);
  std::string wdetail;
  if (witness) {
    wdetail = "R(" + std::to_string(witness->p) + ") fails at";
    for (int i : witness->indices) wdetail += " " + std::to_string(i);
  }
  add(r, "G(4)", !witness, wdetail);

  const PartedGraph ext = group_extension_graph(h, pair);
  const auto connection = extension_connection_set(h, pair);
  const Subgroup sub = generated_subgroup(group, connection, opts.element_cap);
  const std::vector<Vertex> component = sub.indices();
  const Vertex e = group.index(group.identity());
  bool same = false;
  for (const auto& c : connected_components(ext.graph))
    if (std::binary_search(c.begin(), c.end(), e)) same = c == component;
  add(r, "identity_component", same, std::to_string(component.size()) + " of " + std::to_string(group.order()) + " elements");
  const Graph g = induced_subgraph(ext.graph, component);

  // Parts {gamma gamma_i} lying in the identity component, with their gammas.
  std::vector<std::vector<Vertex>> parts;
  std::vector<Element> owners;
  const auto& dist = pair.distinguished();
  for (const auto& gamma : group.elements()) {
    if (!std::binary_search(component.begin(), component.end(), group.index(group.multiply(gamma, dist.front()))))
      continue;
    owners.push_back(gamma);
    parts.push_back(ext.parts[static_cast<std::size_t>(group.index(gamma))]);
  }
  r.n = static_cast<std::int64_t>(parts.size());
  add(r, "n_equals_subgroup_order", r.n == sub.order(), "n = " + std::to_string(r.n));

  const ClusterCheck cc = check_cluster(g, parts);
  add(r, "cluster", cc.valid, cc.valid ? std::to_string(parts.size()) + " parts" : cc.violations.front());
  if (!cc.valid) {
    r.wall_seconds = clock.seconds();
    return r;
  }
  const auto& decomp = *cc.decomposition;
  r.cluster_girth = cluster_girth(decomp);
  add(r, "cluster_girth_at_least_5", !r.cluster_girth || *r.cluster_girth >= 5,
      r.cluster_girth ? std::to_string(*r.cluster_girth) : "inf");
  r.l = static_cast<std::int64_t>(wedge_circle_count(decomp));

  // Part of gamma is H under v_i -> gamma gamma_i.
  bool iso = true;
  const auto hv = h.vertices();
  const auto he = h.edges();
  for (std::size_t p = 0; p < owners.size() && iso; ++p) {
    std::vector<Vertex> to;
    for (const auto& gi : dist) to.push_back(group.index(group.multiply(owners[p], gi)));
    auto image_of = [&](Vertex v) { return to[static_cast<std::size_t>(std::lower_bound(hv.begin(), hv.end(), v) - hv.begin())]; };
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& [u, v] : he) edges.emplace_back(image_of(u), image_of(v));
    iso = induced_subgraph(g, parts[p]) == Graph(make_simplex(to), edges);
  }
  add(r, "parts_isomorphic", iso);

  r.base = homology(k, opts.face_cap);
  r.predicted = wedge_prediction(r.base, r.n, r.l);
  const GroupAction action = left_multiplication_action(sub, connection);

  if (opts.mode != CayleyMode::closed) {
    const SimplicialComplex cl = clique_complex(g);
    check_homology(r, "Cl(G)", cl, opts);
    add(r, "vertex_transitive:Cl(G)", verify_simplicial_action(cl, action) && is_vertex_transitive(cl, action));
  }
  if (opts.mode != CayleyMode::clique) {
    const SimplicialComplex ng = closed_neighbourhood_complex(g);
    const HomologyProfile hn = check_homology(r, "N[G]", ng, opts);
    add(r, "facet_transitive:N[G]", verify_simplicial_action(ng, action) && is_vertex_transitive(ng, action) &&
                                        is_facet_transitive(ng, action));
    try {
      const AcyclicMatching matching = neighbourhood_matching(g, decomp, opts.face_cap);
      const SimplicialComplex a = collapse_critical(ng, matching, opts.face_cap);
      std::vector<Simplex> target;
      for (const auto& part : parts) {
        const SimplicialComplex local = closed_neighbourhood_complex(induced_subgraph(g, part));
        target.insert(target.end(), local.facets().begin(), local.facets().end());
      }
      std::size_t total = 0, critical = 0;
      for (const auto& layer : ng.face_counts(opts.face_cap)) total += layer;
      for (const auto& layer : critical_faces(ng, matching, opts.face_cap)) critical += layer.size();
      const bool lands = a == SimplicialComplex::from_facets(std::move(target));
      const bool counted = 2 * matching.pairs.size() + critical == total;
      const HomologyProfile ha = homology(a, opts.face_cap);
      add(r, "morse_collapse", lands && counted && ha == hn,
          std::to_string(matching.pairs.size()) + " pairs, " + std::to_string(critical) + " critical of " +
              std::to_string(total) + " faces" + (lands ? "" : "; critical complex is not the cluster subcomplex") +
              (ha == hn ? "" : "; collapse changed homology"));
    } catch (const VerificationError& err) {
      add(r, "morse_collapse", false, err.what());
    }
  }
  r.wall_seconds = clock.seconds();
  return r;
}

bool ExampleResult::pass() const {
  return (!expected || computed == *expected) && vertex_transitive && facet_transitive.value_or(true);
}

std::vector<ExampleResult> reproduce_examples(std::size_t face_cap) {
  const HomologyProfile type_a{{{1, {}}, {1, {}}, {0, {2}}}};
  const HomologyProfile type_b{{{1, {}}, {1, {2}}}};
  std::vector<ExampleResult> out;
  for (int n : {13, 15}) {
    const SimplicialComplex c = open_neighbourhood_complex(power_cycle(n, 3));
    const GroupAction shift = translation_action(n);
    ExampleResult r;
    r.name = "N(C_" + std::to_string(n) + "^3)";
    r.computed = homology(c, face_cap);
    r.expected = type_a;
    r.vertex_transitive = verify_simplicial_action(c, shift) && is_vertex_transitive(c, shift);
    r.facet_transitive = r.vertex_transitive && is_facet_transitive(c, shift);
    out.push_back(std::move(r));
  }
  for (int k = 1; k <= 4; ++k) {
    const SimplicialComplex c = k_family_complex(k);
    const GroupAction shift = translation_action(4 * k + 2);
    ExampleResult r;
    r.name = "K_" + std::to_string(4 * k + 2);
    r.computed = homology(c, face_cap);
    if (k >= 2) r.expected = type_b;
    r.vertex_transitive = verify_simplicial_action(c, shift) && is_vertex_transitive(c, shift);
    out.push_back(std::move(r));
  }
  return out;
}

json examples_json(const std::vector<ExampleResult>& results) {
  json rows = json::array();
  bool all = true;
  for (const auto& r : results) {
    json row{{"name", r.name},
             {"computed", r.computed.to_tuple_string()},
             {"expected", r.expected ? json(r.expected->to_tuple_string()) : json(nullptr)},
             {"vertex_transitive", r.vertex_transitive},
             {"pass", r.pass()}};
    if (r.facet_transitive) row["facet_transitive"] = *r.facet_transitive;
    rows.push_back(std::move(row));
    all = all && r.pass();
  }
  return json{{"examples", rows}, {"verdict", all ? "pass" : "fail"}};
}

}  // namespace vth
