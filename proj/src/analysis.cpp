#include "invcurve/analysis.hpp"

#include <chrono>
#include <sstream>
#include <type_traits>

#include "invcurve/errors.hpp"

namespace invcurve {

namespace {

template <class Fn>
auto run_stage(AnalysisReport& r, const char* name, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  auto record = [&] {
    r.timings.emplace_back(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  try {
    if constexpr (std::is_void_v<std::invoke_result_t<Fn>>) {
      fn();
      record();
    } else {
      auto out = fn();
      record();
      return out;
    }
  } catch (const StageError&) {
    throw;
  } catch (const InvariantViolation& e) {
    throw StageError(name, e.what(), true);
  } catch (const Error& e) {
    throw StageError(name, e.what(), false);
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

nlohmann::json forms_json(const std::vector<OneForm>& forms) {
  auto out = nlohmann::json::array();
  for (const auto& w : forms) out.push_back(form_json(w));
  return out;
}

nlohmann::json profile_json(const JordanProfile& p) {
  nlohmann::json blocks = nlohmann::json::array();
  for (auto it = p.blocks.rbegin(); it != p.blocks.rend(); ++it)
    blocks.push_back({{"size", it->first}, {"count", it->second}});
  return {{"factor", p.eigen_factor.to_string()}, {"blocks", blocks}};
}

template <class T, class Fn>
nlohmann::json opt(const std::optional<T>& v, Fn&& fn) {
  return v ? fn(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::pair<OneForm, OneForm> oriented_pair(const EfGenerators& minimal) {
  if (minimal.forms.size() != 2) throw RankMismatch("a pair needs exactly two generators");
  return {minimal.forms[1], minimal.forms[0]};
}

AnalysisReport analyze(const Polynomial& f, const AnalysisOptions& options) {
  AnalysisReport r;
  r.f = f;
  r.weights = options.weights;
  r.tame = run_stage(r, "check_tame", [&] { return check_tame(f, options.weights); });
  if (!r.tame.tame) return r;

  MilnorAlgebra ma = run_stage(r, "milnor_algebra", [&] { return milnor_algebra(f, options.weights); });
  r.mu = ma.mu;
  r.basis = ma.basis;
  r.top_unique_f = ma.f_top_unique;
  r.top_unique_g = ma.g_top_unique;
  if (!ma.g_top_unique) r.warnings.push_back("g-basis does not have a unique monomial of top degree");
  if (!ma.f_top_unique) r.warnings.push_back("f-basis differs from the g-basis in its top monomial");

  MultOperator op = run_stage(r, "build_Af", [&] { return build_Af(ma); });
  r.minpoly = run_stage(r, "min_poly_Af", [&] {
    UniPoly p = min_poly_Af(op);
    require(eval_matrix_poly(p, op.matrix).is_zero(), "minimal polynomial does not annihilate A_f");
    return p;
  });
  run_stage(r, "jordan_profile", [&] {
    r.critical_values = critical_value_factors(r.minpoly);
    r.exponent = exponent(r.minpoly);
    std::size_t total = 0;
    for (const auto& cf : r.critical_values) {
      r.jordan.push_back(jordan_profile(op, cf.factor, r.minpoly));
      total += r.jordan.back().dimension();
    }
    require(total == ma.mu, "Jordan blocks do not fill V_f");
    if (r.exponent > 0) {
      r.jordan_bounded = jordan_blocks_bounded(r.jordan.front());
      if (!*r.jordan_bounded) r.warnings.push_back("Jordan blocks at 0 outside the expected shape");
    }
  });

  if (r.exponent == 0) {
    r.smooth = true;
    r.trivial = run_stage(r, "smooth_shortcut", [&] { return smooth_shortcut(f, r.minpoly); });
  } else {
    r.theta = run_stage(r, "theta_f", [&] { return theta_f(ma, op, r.minpoly); });
    r.kernel_condition = run_stage(r, "kernel_condition", [&] { return check_kernel_condition(ma, op, *r.theta); });
    r.omega = run_stage(r, "omega_f", [&] { return omega_f(ma, *r.theta); });
    r.four = run_stage(r, "four_generator_set", [&] { return four_generator_set(f, *r.omega); });
  }

  r.syzygy_raw = run_stage(r, "ef_from_syzygies", [&] { return ef_from_syzygies(f); });
  run_stage(r, "verify_generation", [&] {
    const EfGenerators& cand = r.smooth ? *r.trivial : *r.four;
    require(verify_generation(r.syzygy_raw, cand).generates, "syzygy generators miss a distinguished form");
    r.four_generates = verify_generation(cand, r.syzygy_raw);
    if (r.smooth) require(r.four_generates->generates, "f dx, f dy, df fail to generate on a smooth curve");
  });

  if (f.is_weighted_homogeneous(options.weights)) {
    r.quasi_homogeneous = true;
    run_stage(r, "quasihomog_pair", [&] {
      r.qh_pair = quasihomog_pair(f, options.weights);
      EfGenerators pair{GeneratorKind::candidate, f, {r.qh_pair->first, r.qh_pair->second}};
      r.qh_generates = verify_generation(pair, r.syzygy_raw).generates;
    });
  }

  if (options.minimal) r.minimal = run_stage(r, "minimal_generators", [&] { return minimal_generators(r.syzygy_raw); });

  std::optional<std::pair<OneForm, OneForm>> pair;
  if (r.qh_pair) {
    pair = r.qh_pair;
    r.saito_source = "quasi_homogeneous";
  } else if (r.minimal && r.minimal->forms.size() == 2) {
    pair = oriented_pair(*r.minimal);
    r.saito_source = "minimal";
  }
  if (pair) {
    r.saito = run_stage(r, "saito_check", [&] {
      SaitoVerdict v = saito_check(pair->first, pair->second, f);
      if (v.free) {
        EfGenerators cand{GeneratorKind::candidate, f, {pair->first, pair->second}};
        if (!verify_generation(cand, r.syzygy_raw).generates)
          r.warnings.push_back("Saito pair does not generate E_f");
      }
      return v;
    });
  }
  return r;
}

nlohmann::json form_json(const OneForm& w) { return {{"P", w.P.to_string()}, {"Q", w.Q.to_string()}}; }

nlohmann::json to_json(const AnalysisReport& r, bool with_timings) {
  nlohmann::json j;
  j["input"] = {{"f", r.f.to_string()},
                {"weights", {r.weights.alpha1, r.weights.alpha2}},
                {"field", r.f.field().describe()}};
  j["tame"] = {{"tame", r.tame.tame}, {"leading_form", r.tame.g.to_string()}};
  if (!r.tame.reason.empty()) j["tame"]["reason"] = r.tame.reason;
  if (!r.tame.tame) return j;
  auto basis = nlohmann::json::array();
  for (const auto& m : r.basis) basis.push_back(m.to_string());
  j["milnor"] = {{"mu", r.mu}, {"basis", basis}, {"top_unique_f", r.top_unique_f}, {"top_unique_g", r.top_unique_g}};
  j["minimal_polynomial"] = r.minpoly.to_string();
  auto cv = nlohmann::json::array();
  for (const auto& c : r.critical_values)
    cv.push_back({{"factor", c.factor.to_string()},
                  {"multiplicity", c.multiplicity},
                  {"root", opt(c.root, [](const Scalar& s) { return nlohmann::json(s.to_string()); })}});
  j["critical_values"] = cv;
  j["exponent"] = r.exponent;
  auto jp = nlohmann::json::array();
  for (const auto& p : r.jordan) jp.push_back(profile_json(p));
  j["jordan"] = jp;
  j["jordan_bounded"] = opt(r.jordan_bounded, [](bool b) { return nlohmann::json(b); });
  j["path"] = r.smooth ? "smooth" : "four_generator";
  j["theta"] = opt(r.theta, [](const Polynomial& p) { return nlohmann::json(p.to_string()); });
  j["omega_f"] = opt(r.omega, [](const OneForm& w) { return form_json(w); });
  j["kernel_condition"] = opt(r.kernel_condition, [](bool b) { return nlohmann::json(b); });

  nlohmann::json gens;
  const EfGenerators* distinguished = r.smooth ? (r.trivial ? &*r.trivial : nullptr) : (r.four ? &*r.four : nullptr);
  if (distinguished) {
    nlohmann::json d = {{"count", distinguished->forms.size()}, {"forms", forms_json(distinguished->forms)}};
    if (r.four_generates) {
      d["generates"] = r.four_generates->generates;
      d["witness"] = opt(r.four_generates->witness, [](const OneForm& w) { return form_json(w); });
    }
    gens[to_string(distinguished->kind)] = d;
  }
  gens["syzygy_raw"] = {{"count", r.syzygy_raw.forms.size()}, {"forms", forms_json(r.syzygy_raw.forms)}};
  if (r.minimal) gens["minimal"] = {{"count", r.minimal->forms.size()}, {"forms", forms_json(r.minimal->forms)}};
  j["generators"] = gens;

  if (r.qh_pair)
    j["quasi_homogeneous"] = {{"pair", {form_json(r.qh_pair->first), form_json(r.qh_pair->second)}},
                              {"generates", *r.qh_generates}};
  else
    j["quasi_homogeneous"] = nullptr;
  if (r.saito)
    j["saito"] = {{"source", r.saito_source},
                  {"free", r.saito->free},
                  {"constant", opt(r.saito->constant, [](const Scalar& s) { return nlohmann::json(s.to_string()); })},
                  {"pair", {form_json(r.saito->pair.first), form_json(r.saito->pair.second)}}};
  else
    j["saito"] = nullptr;
  j["warnings"] = r.warnings;
  if (with_timings) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [stage, secs] : r.timings) t.push_back({{"stage", stage}, {"seconds", secs}});
    j["timings"] = t;
  }
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "f            " << r.f.to_string() << "\n";
  out << "weights      (" << r.weights.alpha1 << ", " << r.weights.alpha2 << ")\n";
  out << "field        " << r.f.field().describe() << "\n";
  out << "leading form " << r.tame.g.to_string() << "\n";
  if (!r.tame.tame) {
    out << "tame         no (" << r.tame.reason << ")\n";
    return out.str();
  }
  out << "tame         yes\n";
  out << "mu           " << r.mu << "\n";
  out << "min poly     " << r.minpoly.to_string() << "\n";
  out << "exponent     " << r.exponent << "\n";
  out << "critical values\n";
  for (std::size_t k = 0; k < r.critical_values.size(); ++k) {
    const auto& c = r.critical_values[k];
    out << "  " << c.factor.to_string() << "  multiplicity " << c.multiplicity;
    if (c.root) out << "  root " << c.root->to_string();
    out << "  Jordan " << r.jordan[k].to_string() << "\n";
  }
  if (r.smooth) {
    out << "path         smooth (f dx, f dy, df)\n";
  } else {
    out << "theta        " << r.theta->to_string() << "\n";
    out << "kernel cond  " << (*r.kernel_condition ? "holds" : "fails") << "\n";
    out << "omega_f      " << r.omega->to_string() << "\n";
  }
  if (r.four_generates) {
    out << (r.smooth ? "trivial forms generate " : "four forms generate ") << (r.four_generates->generates ? "yes" : "no");
    if (r.four_generates->witness) out << " (witness " << r.four_generates->witness->to_string() << ")";
    out << "\n";
  }
  out << "syzygy gens  " << r.syzygy_raw.forms.size() << "\n";
  if (r.minimal) {
    out << "minimal      " << r.minimal->forms.size() << "\n";
    for (const auto& w : r.minimal->forms) out << "  " << w.to_string() << "\n";
  }
  if (r.qh_pair)
    out << "quasi-homogeneous pair " << r.qh_pair->first.to_string() << ", " << r.qh_pair->second.to_string()
        << (*r.qh_generates ? " generates" : " does not generate") << "\n";
  if (r.saito) {
    out << "saito        " << (r.saito->free ? "free" : "not free");
    if (r.saito->constant) out << ", c = " << r.saito->constant->to_string();
    out << " (" << r.saito_source << " pair)\n";
  }
  for (const auto& w : r.warnings) out << "warning      " << w << "\n";
  out << "timings\n";
  for (const auto& [stage, secs] : r.timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", secs);
    out << "  " << stage << " " << buf << " s\n";
  }
  return out.str();
}

}  // namespace invcurve
