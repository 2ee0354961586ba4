#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invcurve/analysis.hpp"
#include "invcurve/corpus.hpp"
#include "invcurve/errors.hpp"
#include "invcurve/plot.hpp"

using namespace invcurve;

namespace {

enum Exit { kOk = 0, kFailure = 1, kNotTame = 2, kInvariant = 3 };

struct Common {
  std::string poly;
  std::vector<long> weights{1, 1};
  std::string minpoly;
  std::string json;
};

void add_input(CLI::App* cmd, Common& c) {
  cmd->add_option("-f,--poly", c.poly, "Polynomial in x, y (and the field generator z)")->required();
  cmd->add_option("--weights", c.weights, "Weights of x and y")->expected(2);
  cmd->add_option("--minpoly", c.minpoly, "Minimal polynomial of z, e.g. \"z^2+1\"");
}

Polynomial read_poly(const Common& c) {
  FieldSpec field = c.minpoly.empty() ? FieldSpec{} : parse_field(c.minpoly);
  return parse_poly(c.poly, field);
}

Weights read_weights(const Common& c) { return Weights(c.weights.at(0), c.weights.at(1)); }

void write_out(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

nlohmann::json profile_json(const JordanProfile& p) {
  auto blocks = nlohmann::json::array();
  for (auto it = p.blocks.rbegin(); it != p.blocks.rend(); ++it)
    blocks.push_back({{"size", it->first}, {"count", it->second}});
  return {{"factor", p.eigen_factor.to_string()}, {"blocks", blocks}};
}

int cmd_analyze(const Common& c, bool timings, bool skip_minimal) {
  AnalysisReport r = analyze(read_poly(c), {read_weights(c), !skip_minimal});
  if (!c.json.empty()) write_out(c.json, to_json(r, timings).dump(2) + "\n");
  if (c.json != "-") std::cout << to_text(r);
  return r.tame.tame ? kOk : kNotTame;
}

int cmd_generators(const Common& c, const std::string& kind) {
  AnalysisReport r = analyze(read_poly(c), {read_weights(c), kind == "all" || kind == "minimal"});
  if (!r.tame.tame) {
    std::cerr << "not tame: " << r.tame.reason << "\n";
    return kNotTame;
  }
  nlohmann::json j = to_json(r)["generators"];
  if (kind != "all") {
    std::string key = kind == "syzygy" ? "syzygy_raw" : kind == "trivial" ? "trivial_smooth" : kind == "four" ? "four_generator" : kind;
    if (!j.contains(key)) {
      std::cerr << "no " << kind << " generators for this input\n";
      return kFailure;
    }
    j = nlohmann::json{{key, j[key]}};
  }
  if (!c.json.empty()) write_out(c.json, j.dump(2) + "\n");
  if (c.json != "-") {
    for (auto& [name, set] : j.items()) {
      std::cout << name << " (" << set["count"].get<std::size_t>() << ")";
      if (set.contains("generates")) std::cout << (set["generates"].get<bool>() ? " generates" : " does not generate");
      std::cout << "\n";
      for (auto& w : set["forms"])
        std::cout << "  [" << w["P"].get<std::string>() << ", " << w["Q"].get<std::string>() << "]\n";
    }
  }
  return kOk;
}

int cmd_jordan(const Common& c, bool relaxed) {
  Polynomial f = read_poly(c);
  Weights w = read_weights(c);
  TameVerdict tv = check_tame(f, w);
  if (!tv.tame && !relaxed) {
    std::cerr << "not tame: " << tv.reason << "\n";
    return kNotTame;
  }
  MilnorAlgebra ma = milnor_algebra(f, w, !relaxed);
  MultOperator op = build_Af(ma);
  UniPoly p = min_poly_Af(op);
  nlohmann::json j = {{"f", f.to_string()}, {"tame", tv.tame}, {"mu", ma.mu}, {"minimal_polynomial", p.to_string()},
                      {"exponent", exponent(p)}};
  auto profiles = nlohmann::json::array();
  std::cout << "mu " << ma.mu << "\nmin poly " << p.to_string() << "\n";
  for (const auto& cf : critical_value_factors(p)) {
    JordanProfile prof = jordan_profile(op, cf.factor, p);
    auto pj = profile_json(prof);
    pj["multiplicity"] = cf.multiplicity;
    pj["root"] = cf.root ? nlohmann::json(cf.root->to_string()) : nlohmann::json(nullptr);
    profiles.push_back(pj);
    if (c.json != "-") std::cout << cf.factor.to_string() << "  " << prof.to_string() << "\n";
  }
  j["jordan"] = profiles;
  if (!c.json.empty()) write_out(c.json, j.dump(2) + "\n");
  return kOk;
}

int cmd_plot(const Common& c, const std::string& svg, double window, int grid, std::optional<double> embed) {
  PlotOptions opts{window, grid, embed};
  write_out(svg, render_svg(read_poly(c), opts));
  return kOk;
}

int cmd_corpus(std::vector<std::string> only, bool expect_failure, const std::string& json) {
  if (only.empty()) only = fixture_names();
  auto results = run_corpus(only);
  bool all = true;
  nlohmann::json j = nlohmann::json::array();
  for (auto& r : results) {
    if (expect_failure)
      r.facts.push_back({"generation by f dx, f dy, df, omega_f fails", r.four_generates && !*r.four_generates, ""});
    bool ok = r.passed();
    all = all && ok;
    std::printf("%-16s %s  %zu facts\n", r.name.c_str(), ok ? "pass" : "FAIL", r.facts.size());
    for (const auto& f : r.facts)
      if (!f.passed) std::printf("    failed: %s %s\n", f.name.c_str(), f.detail.c_str());
    if (!r.error.empty()) std::printf("    error: %s\n", r.error.c_str());
    nlohmann::json facts = nlohmann::json::array();
    for (const auto& f : r.facts) facts.push_back({{"fact", f.name}, {"passed", f.passed}, {"detail", f.detail}});
    j.push_back({{"fixture", r.name}, {"f", r.f}, {"passed", ok}, {"facts", facts}, {"error", r.error}});
  }
  std::printf("%zu fixtures, %s\n", results.size(), all ? "all passed" : "failures");
  if (!json.empty()) write_out(json, j.dump(2) + "\n");
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant curves: Milnor algebra, tangent forms and Saito pairs"};
  app.require_subcommand(1);

  Common analyze_in, gen_in, jordan_in, plot_in;
  bool timings = false, skip_minimal = false, relaxed = false, expect_failure = false;
  std::string kind = "all", svg = "-", corpus_json;
  double window = 2.0;
  int grid = 200;
  std::optional<double> embed;
  std::vector<std::string> only;

  auto* an = app.add_subcommand("analyze", "Run the full pipeline on one polynomial");
  add_input(an, analyze_in);
  an->add_option("--json", analyze_in.json, "Write the JSON report to a path (\"-\" for stdout)");
  an->add_flag("--timings", timings, "Include stage timings in the JSON report");
  an->add_flag("--skip-minimal", skip_minimal, "Skip greedy pruning");

  auto* gen = app.add_subcommand("generators", "Print generating sets of E_f");
  add_input(gen, gen_in);
  gen->add_option("--json", gen_in.json, "Write JSON to a path (\"-\" for stdout)");
  gen->add_option("--kind", kind, "trivial, four, syzygy, minimal or all")
      ->check(CLI::IsMember({"trivial", "four", "syzygy", "minimal", "all"}));

  auto* jo = app.add_subcommand("jordan", "Minimal polynomial and Jordan profiles of A_f");
  add_input(jo, jordan_in);
  jo->add_option("--json", jordan_in.json, "Write JSON to a path (\"-\" for stdout)");
  jo->add_flag("--relaxed", relaxed, "Allow non-tame input when V_f is finite dimensional");

  auto* pl = app.add_subcommand("plot", "Render the real zero locus as SVG");
  add_input(pl, plot_in);
  pl->add_option("--svg", svg, "Output path (\"-\" for stdout)");
  pl->add_option("--window", window, "Half-width R of the square [-R, R]^2");
  pl->add_option("--grid", grid, "Cells per side");
  pl->add_option("--embed", embed, "Numeric value of the field generator");

  auto* co = app.add_subcommand("corpus", "Run the fixture corpus");
  co->add_option("--only", only, "Fixture name (repeatable)");
  co->add_flag("--expect-generation-failure", expect_failure,
               "Require that f dx, f dy, df, omega_f fail to generate for each fixture");
  co->add_option("--json", corpus_json, "Write JSON results to a path (\"-\" for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (an->parsed()) return cmd_analyze(analyze_in, timings, skip_minimal);
    if (gen->parsed()) return cmd_generators(gen_in, kind);
    if (jo->parsed()) return cmd_jordan(jordan_in, relaxed);
    if (pl->parsed()) return cmd_plot(plot_in, svg, window, grid, embed);
    if (co->parsed()) return cmd_corpus(only, expect_failure, corpus_json);
  } catch (const StageError& e) {
    std::cerr << "error in " << e.what() << "\n";
    return e.invariant_violation() ? kInvariant : kFailure;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const NotTame& e) {
    std::cerr << "not tame: " << e.what() << "\n";
    return kNotTame;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
