#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vth/homology.hpp"
#include "vth/simplicial.hpp"

namespace vth {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PipelineReport {
  std::string kind;           // "cyclic" or "cayley"
  nlohmann::json parameters;  // enough to rerun the construction
  std::int64_t n = 0;
  std::int64_t l = 0;
  std::optional<std::size_t> cluster_girth;  // nullopt = infinite
  HomologyProfile base;
  HomologyProfile predicted;
  std::vector<std::pair<std::string, HomologyProfile>> computed;  // complex name -> profile
  std::vector<CheckResult> checks;
  double wall_seconds = 0;

  bool pass() const;
  const CheckResult* check(const std::string& name) const;
  /// Deterministic apart from "wall_seconds".
  nlohmann::json to_json() const;
};

struct PipelineOptions {
  std::size_t face_cap = SimplicialComplex::default_face_cap();
  std::int64_t element_cap = 10'000;
  bool self_checks = true;
};

/// Greedy ruler, least modulus, cyclic extension, then every check on it.
/// Throws std::invalid_argument if `k` is empty or disconnected and
/// CapExceeded past the face cap.
PipelineReport pipeline_cyclic(const SimplicialComplex& k, const PipelineOptions& opts = {});

enum class CayleyMode { clique, closed, both };

struct CayleyOptions : PipelineOptions {
  CayleyMode mode = CayleyMode::both;
  /// Progression-free marks; defaults to progression_free(d').
  std::vector<std::int64_t> marks;
  /// Defaults to 4 a_d + 1.
  std::optional<int> modulus;
  /// Exhaustive G(4) check instead of the pruned search.
  bool exhaustive_g4 = false;
};

/// Barycentric 1-skeleton H of `k`, the pair Gamma_{d'}, the extension graph,
/// its identity component G and the homology of Cl(G) and/or N[G] against the
/// wedge prediction. Throws CapExceeded when (d'+1)! m exceeds the element cap.
PipelineReport pipeline_cayley(const SimplicialComplex& k, const CayleyOptions& opts = {});

struct ExampleResult {
  std::string name;
  HomologyProfile computed;
  std::optional<HomologyProfile> expected;  // nullopt: recorded only
  bool vertex_transitive = false;
  std::optional<bool> facet_transitive;  // checked for neighbourhood complexes only
  bool pass() const;
};

/// N(C_13^3), N(C_15^3) and the k-family complexes for k = 1..4 (k = 1 is
/// recorded but not asserted).
std::vector<ExampleResult> reproduce_examples(std::size_t face_cap = SimplicialComplex::default_face_cap());
nlohmann::json examples_json(const std::vector<ExampleResult>& results);

}  // namespace vth
