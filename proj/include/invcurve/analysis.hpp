#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "invcurve/efmod.hpp"

namespace invcurve {

struct AnalysisOptions {
  Weights weights;
  /// Skip greedy pruning (the most expensive stage on large inputs).
  bool minimal = true;
};

struct AnalysisReport {
  Polynomial f;
  Weights weights;

  TameVerdict tame;
  std::size_t mu = 0;
  std::vector<Monomial> basis;
  bool top_unique_f = false;
  bool top_unique_g = false;

  UniPoly minpoly;
  std::vector<CriticalFactor> critical_values;
  unsigned exponent = 0;
  std::vector<JordanProfile> jordan;
  /// Size 1 or 2 blocks at 0, not all of size 2; empty when 0 is not an eigenvalue.
  std::optional<bool> jordan_bounded;

  bool smooth = false;
  std::optional<Polynomial> theta;
  std::optional<OneForm> omega;
  std::optional<bool> kernel_condition;

  std::optional<EfGenerators> trivial;
  std::optional<EfGenerators> four;
  std::optional<GenerationVerdict> four_generates;
  EfGenerators syzygy_raw;
  std::optional<EfGenerators> minimal;

  bool quasi_homogeneous = false;
  std::optional<std::pair<OneForm, OneForm>> qh_pair;
  std::optional<bool> qh_generates;

  std::optional<SaitoVerdict> saito;
  std::string saito_source;
  /// Findings that do not stop the pipeline.
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, double>> timings;
};

/// Runs the whole pipeline. A non-tame input stops after the tameness stage
/// with report.tame.tame == false. Engine errors are rethrown as StageError.
AnalysisReport analyze(const Polynomial& f, const AnalysisOptions& options = {});

/// Orients a two-element generating set as (omega_0, omega_inf): the second
/// member in pruning order first.
std::pair<OneForm, OneForm> oriented_pair(const EfGenerators& minimal);

nlohmann::json form_json(const OneForm& w);
nlohmann::json to_json(const AnalysisReport& r, bool with_timings = false);
std::string to_text(const AnalysisReport& r);

}  // namespace invcurve
