// vth: constructions, homology and verification from the command line.
//
// Exit codes: 0 everything checked out, 1 a verification failed,
// 2 usage error or a size cap was hit.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vth/cluster.hpp"
#include "vth/constructions.hpp"
#include "vth/errors.hpp"
#include "vth/groups.hpp"
#include "vth/homology.hpp"
#include "vth/io.hpp"
#include "vth/pipeline.hpp"
#include "vth/transitivity.hpp"

using namespace vth;
using io::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const auto v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::size_t face_cap(std::size_t flag) { return flag ? flag : SimplicialComplex::default_face_cap(); }

void emit(const json& j) { std::cout << io::dump(j); }

// Labels of group-derived vertex ids.
io::VertexLabels element_labels(const FiniteGroup& g) {
  io::VertexLabels l;
  for (const auto& e : g.elements()) l.names.push_back(g.label(e));
  return l;
}

struct Args {
  std::string complex_path, graph_path, parts_path, action_path, profile_path, pair_path;
  std::string ruler = "greedy", n = "auto", d = "auto", m = "auto", marks, family, params, output = "graph";
  std::string mode = "both", golomb;
  int p = 3, word_length = 8, sym_m = 6;
  bool exhaustive = false, all_up_to = false;
  std::size_t face_cap = 0;
  std::int64_t element_cap = 10'000;
};

int construct_cyclic(const Args& a) {
  const auto in = io::read_complex(io::load_file(a.complex_path));
  const auto& k = in.complex;
  const GolombRuler ruler = a.ruler == "greedy" ? greedy_golomb(static_cast<int>(k.vertex_count()))
                                                 : GolombRuler{parse_list(a.ruler)};
  const std::int64_t n = a.n == "auto" ? choose_modulus(ruler) : std::stoll(a.n);
  const PartedComplex ext = cyclic_extension(k, ruler, n);
  json out = io::write_complex(ext.complex);
  out["parts"] = ext.parts;
  out["provenance"] = json{{"construction", "cyclic"}, {"ruler", ruler.marks}, {"modulus", n}};
  emit(out);
  return kPass;
}

int construct_cayley(const Args& a) {
  const auto k = io::read_complex(io::load_file(a.complex_path)).complex;
  const Graph h = barycentric_1skeleton(k);
  const int dprime = static_cast<int>(h.vertex_count());
  if (a.d != "auto" && std::stoi(a.d) != dprime)
    throw std::invalid_argument("--d must equal the number of faces of the complex (" + std::to_string(dprime) + ")");
  const auto marks = a.marks.empty() ? progression_free(dprime) : parse_list(a.marks);
  const int m = a.m == "auto" ? static_cast<int>(4 * marks.back() + 1) : std::stoi(a.m);
  std::int64_t order = m;
  for (int i = 2; i <= dprime + 1; ++i) {
    order *= i;
    if (order > a.element_cap) throw CapExceeded("group order exceeds the element cap; try a smaller complex");
  }
  const GroupPair pair = gamma_d_pair(marks, m);
  const PartedGraph ext = group_extension_graph(h, pair);
  const Subgroup sub = generated_subgroup(pair.group(), extension_connection_set(h, pair), a.element_cap);
  const Graph g = induced_subgraph(ext.graph, sub.indices());
  const auto labels = element_labels(pair.group());
  json out;
  if (a.output == "graph") out = io::write_graph(g, labels);
  else if (a.output == "clique") out = io::write_complex(clique_complex(g), labels);
  else if (a.output == "closed") out = io::write_complex(closed_neighbourhood_complex(g), labels);
  else throw std::invalid_argument("--output must be graph, clique or closed");
  out["provenance"] = json{{"construction", "cayley"}, {"marks", marks}, {"modulus", m},
                           {"pair", io::write_pair(pair)}, {"subgroup_order", sub.order()}};
  emit(out);
  return kPass;
}

int construct_example(const Args& a) {
  const auto params = parse_list(a.params);
  json out;
  if (a.family == "power-cycle") {
    if (params.size() != 2) throw std::invalid_argument("power-cycle takes --params n,r");
    const Graph g = power_cycle(static_cast<int>(params[0]), static_cast<int>(params[1]));
    if (a.output == "graph") out = io::write_graph(g);
    else if (a.output == "open") out = io::write_complex(open_neighbourhood_complex(g));
    else if (a.output == "closed") out = io::write_complex(closed_neighbourhood_complex(g));
    else if (a.output == "clique") out = io::write_complex(clique_complex(g));
    else throw std::invalid_argument("--output must be graph, open, closed or clique");
  } else if (a.family == "k-family") {
    if (params.size() != 1) throw std::invalid_argument("k-family takes --params k");
    out = io::write_complex(k_family_complex(static_cast<int>(params[0])));
  } else {
    throw std::invalid_argument("--family must be power-cycle or k-family");
  }
  out["provenance"] = json{{"construction", a.family}, {"params", params}};
  emit(out);
  return kPass;
}

int cmd_homology(const Args& a) {
  const auto k = io::read_complex(io::load_file(a.complex_path)).complex;
  const auto h = homology(k, face_cap(a.face_cap));
  json out = io::write_profile(h);
  out["tuple"] = h.to_tuple_string();
  emit(out);
  return kPass;
}

int verify_golomb(const Args& a) {
  const auto marks = parse_list(a.golomb);
  const auto bad = golomb_violation(marks);
  json out{{"golomb", !bad}};
  if (bad) {
    out["repeated_difference"] = bad->difference;
    out["pairs"] = json::array({json::array({marks[bad->i], marks[bad->j]}), json::array({marks[bad->k], marks[bad->l]})});
  } else {
    out["modulus"] = choose_modulus(GolombRuler{marks});
  }
  emit(out);
  return bad ? kFail : kPass;
}

int verify_rp(const Args& a) {
  const GroupPair pair = io::read_pair(io::load_file(a.pair_path));
  const auto mode = a.exhaustive ? RSearch::exhaustive : RSearch::pruned;
  const auto w = a.all_up_to ? satisfies_G(pair, a.p, mode) : satisfies_R(pair, a.p, mode);
  json out{{"condition", (a.all_up_to ? "G(" : "R(") + std::to_string(a.p) + ")"}, {"holds", !w}};
  if (w) {
    std::vector<int> one_based;
    for (int i : w->indices) one_based.push_back(i + 1);
    out["witness"] = json{{"p", w->p}, {"indices", one_based}};
  }
  emit(out);
  return w ? kFail : kPass;
}

int verify_identities(const Args& a) {
  const auto r = verify_transposition_identities(a.sym_m, a.word_length);
  emit(json{{"m", r.m},
            {"word_length", r.word_length},
            {"words_checked", r.words_checked},
            {"identity_words", r.identity_words},
            {"with_adjacent_repeat", r.with_adjacent_repeat},
            {"matching_pattern", r.matching_pattern},
            {"exceptions", r.exceptions}});
  return r.exceptions.empty() ? kPass : kFail;
}

int verify_cluster_cmd(const Args& a) {
  const json host = io::load_file(a.complex_path);
  const json parts_j = io::load_file(a.parts_path);
  const json raw = parts_j.is_object() ? parts_j.at("parts") : parts_j;
  auto read_parts = [&](const io::VertexLabels& labels) {
    std::vector<std::vector<Vertex>> parts;
    for (const auto& p : raw) {
      std::vector<Vertex> ids;
      for (const auto& v : p) ids.push_back(labels.id(v));
      parts.push_back(make_simplex(std::move(ids)));
    }
    return parts;
  };
  ClusterCheck check;
  if (host.contains("facets")) {
    const auto in = io::read_complex(host);
    check = check_cluster(in.complex, read_parts(in.labels));
  } else {
    const auto in = io::read_graph(host);
    check = check_cluster(in.graph, read_parts(in.labels));
  }
  emit(io::cluster_report(check));
  return check.valid ? kPass : kFail;
}

int verify_transitivity(const Args& a) {
  const auto in = io::read_complex(io::load_file(a.complex_path));
  const auto action = io::read_action(io::load_file(a.action_path), in.complex.vertices(), in.labels);
  const bool simplicial = verify_simplicial_action(in.complex, action);
  json out{{"simplicial", simplicial}};
  if (simplicial) {
    out["vertex_transitive"] = is_vertex_transitive(in.complex, action);
    out["facet_transitive"] = is_facet_transitive(in.complex, action);
  }
  emit(out);
  return simplicial && out["vertex_transitive"].get<bool>() ? kPass : kFail;
}

int verify_lefschetz(const Args& a) {
  const auto p = io::read_profile(io::load_file(a.profile_path));
  emit(json{{"verdict", to_string(lefschetz_obstruction(p))}, {"euler_characteristic", p.euler_characteristic()}});
  return kPass;
}

int pipeline_cyclic_cmd(const Args& a) {
  const auto k = io::read_complex(io::load_file(a.complex_path)).complex;
  PipelineOptions opts;
  opts.face_cap = face_cap(a.face_cap);
  const auto r = pipeline_cyclic(k, opts);
  emit(r.to_json());
  return r.pass() ? kPass : kFail;
}

int pipeline_cayley_cmd(const Args& a) {
  const auto k = io::read_complex(io::load_file(a.complex_path)).complex;
  CayleyOptions opts;
  opts.face_cap = face_cap(a.face_cap);
  opts.element_cap = a.element_cap;
  opts.exhaustive_g4 = a.exhaustive;
  if (!a.marks.empty()) opts.marks = parse_list(a.marks);
  if (a.m != "auto") opts.modulus = std::stoi(a.m);
  if (a.mode == "clique") opts.mode = CayleyMode::clique;
  else if (a.mode == "closed") opts.mode = CayleyMode::closed;
  else if (a.mode != "both") throw std::invalid_argument("--mode must be clique, closed or both");
  const auto r = pipeline_cayley(k, opts);
  emit(r.to_json());
  return r.pass() ? kPass : kFail;
}

int reproduce(const Args& a) {
  const auto results = reproduce_examples(face_cap(a.face_cap));
  emit(examples_json(results));
  return std::all_of(results.begin(), results.end(), [](const ExampleResult& r) { return r.pass(); }) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-transitive complexes: constructions and homology checks"};
  app.require_subcommand(1);
  Args a;
  std::function<int()> run;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Args&)) {
    cmd->callback([&run, fn, &a] { run = [fn, &a] { return fn(a); }; });
  };

  auto* construct = app.add_subcommand("construct", "build a complex or graph");
  construct->require_subcommand(1);
  auto* cc = construct->add_subcommand("cyclic", "cyclic extension of a complex");
  cc->add_option("--complex", a.complex_path)->required();
  cc->add_option("--ruler", a.ruler, "greedy or a1,a2,...");
  cc->add_option("--n", a.n, "auto or the modulus");
  bind(cc, construct_cyclic);
  auto* cy = construct->add_subcommand("cayley", "identity component of the group extension graph");
  cy->add_option("--complex", a.complex_path)->required();
  cy->add_option("--d", a.d, "auto or the face count of the complex");
  cy->add_option("--m", a.m, "auto or the cyclic modulus");
  cy->add_option("--marks", a.marks, "progression-free marks a1,a2,...");
  cy->add_option("--output", a.output, "graph, clique or closed");
  cy->add_option("--element-cap", a.element_cap);
  bind(cy, construct_cayley);
  auto* ce = construct->add_subcommand("example", "torsion example families");
  ce->add_option("--family", a.family, "power-cycle or k-family")->required();
  ce->add_option("--params", a.params, "n,r or k")->required();
  ce->add_option("--output", a.output, "graph, open, closed or clique (power-cycle only)");
  bind(ce, construct_example);

  auto* hom = app.add_subcommand("homology", "integral homology of a complex");
  hom->add_option("complex", a.complex_path)->required();
  hom->add_option("--face-cap", a.face_cap);
  bind(hom, cmd_homology);

  auto* verify = app.add_subcommand("verify", "individual checks");
  verify->require_subcommand(1);
  auto* vg = verify->add_subcommand("golomb", "Golomb property of a1,a2,...");
  vg->add_option("marks", a.golomb)->required();
  bind(vg, verify_golomb);
  auto* vr = verify->add_subcommand("rp", "condition R(p), or G(p) with --all");
  vr->add_option("pair", a.pair_path)->required();
  vr->add_option("--p", a.p);
  vr->add_flag("--all", a.all_up_to, "check R(1)..R(p)");
  vr->add_flag("--exhaustive", a.exhaustive, "no pruning");
  bind(vr, verify_rp);
  auto* vi = verify->add_subcommand("identities", "identity words in the transpositions (1 i)");
  vi->add_option("--m", a.sym_m);
  vi->add_option("--length", a.word_length)->check(CLI::IsMember({4, 6, 8}));
  bind(vi, verify_identities);
  auto* vc = verify->add_subcommand("cluster", "cluster check of a complex or graph");
  vc->add_option("host", a.complex_path)->required();
  vc->add_option("parts", a.parts_path)->required();
  bind(vc, verify_cluster_cmd);
  auto* vt = verify->add_subcommand("transitivity", "simplicial action and its orbits");
  vt->add_option("complex", a.complex_path)->required();
  vt->add_option("action", a.action_path)->required();
  bind(vt, verify_transitivity);
  auto* vl = verify->add_subcommand("lefschetz", "fixed-point obstruction for a profile");
  vl->add_option("profile", a.profile_path)->required();
  bind(vl, verify_lefschetz);

  auto* pipe = app.add_subcommand("pipeline", "construction plus every check");
  pipe->require_subcommand(1);
  auto* pc = pipe->add_subcommand("cyclic");
  pc->add_option("complex", a.complex_path)->required();
  pc->add_option("--face-cap", a.face_cap);
  bind(pc, pipeline_cyclic_cmd);
  auto* py = pipe->add_subcommand("cayley");
  py->add_option("complex", a.complex_path)->required();
  py->add_option("--mode", a.mode, "clique, closed or both");
  py->add_option("--marks", a.marks);
  py->add_option("--m", a.m);
  py->add_option("--face-cap", a.face_cap);
  py->add_option("--element-cap", a.element_cap);
  py->add_flag("--exhaustive", a.exhaustive, "exhaustive G(4) check");
  bind(py, pipeline_cayley_cmd);

  auto* rep = app.add_subcommand("reproduce-examples", "torsion examples and their transitivity");
  rep->add_option("--face-cap", a.face_cap);
  bind(rep, reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    return run ? run() : kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
