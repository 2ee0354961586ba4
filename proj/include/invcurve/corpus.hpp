#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "invcurve/analysis.hpp"

namespace invcurve {

struct Fact {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FixtureResult {
  std::string name;
  std::string f;
  std::vector<Fact> facts;
  /// Jordan profile at eigenvalue 0 when V_f is finite and 0 is a critical value.
  std::optional<JordanProfile> jordan_at_zero;
  /// Whether f dx, f dy, df, omega_f generate E_f, when that was checked.
  std::optional<bool> four_generates;
  double seconds = 0;
  /// Set when the fixture threw instead of finishing.
  std::string error;

  bool passed() const;
};

std::vector<std::string> fixture_names();
/// Throws std::out_of_range for unknown names.
FixtureResult run_fixture(const std::string& name);
/// Fixtures run as concurrent tasks; results come back in input order.
std::vector<FixtureResult> run_corpus(const std::vector<std::string>& names);

/// Integer polynomial in x of degree d from a fixed seed, leading coefficient nonzero.
Polynomial seeded_univariate(int degree, unsigned seed);

/// Degree pattern of (a1, a2, a3, b1, b2, b3) for graphs of degree d; -1 means zero.
std::array<long, 6> graph_degree_pattern(int d);

struct GraphPair {
  OneForm omega0, omega_inf;
  std::array<long, 6> degrees;
};

/// Tangent pair of the shape ((y a1 + a2) dx + a3 dy, (y b1 + b2) dx + b3 dy)
/// to y - p(x) with the given component degrees and wedge exactly y - p(x),
/// found by exact linear algebra. Empty when no such pair exists.
std::optional<GraphPair> graph_pattern_pair(const Polynomial& p, const std::array<long, 6>& pattern);

}  // namespace invcurve
