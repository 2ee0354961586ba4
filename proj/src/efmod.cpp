#include "invcurve/efmod.hpp"

#include <algorithm>

#include "invcurve/errors.hpp"

namespace invcurve {

namespace {

std::vector<ModuleVector> as_vectors(const std::vector<OneForm>& forms) {
  std::vector<ModuleVector> out;
  for (const auto& w : forms) out.push_back(ModuleVector::from_form(w));
  return out;
}

std::vector<OneForm> trivial_forms(const Polynomial& f) {
  Polynomial zero(f.field());
  return {OneForm(f, zero), OneForm(zero, f), exterior_derivative(f)};
}

long max_total_degree(const OneForm& w) { return std::max(w.P.total_degree(), w.Q.total_degree()); }

}  // namespace

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::trivial_smooth: return "trivial_smooth";
    case GeneratorKind::four_generator: return "four_generator";
    case GeneratorKind::syzygy_raw: return "syzygy_raw";
    case GeneratorKind::minimal: return "minimal";
    case GeneratorKind::candidate: return "candidate";
  }
  return "candidate";
}

bool is_tangent(const OneForm& w, const Polynomial& f) {
  return divides(f, wedge(exterior_derivative(f), w).coeff);
}

EfGenerators ef_from_syzygies(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) throw ZeroInput("E_f needs a non-constant polynomial");
  std::vector<ModuleVector> gens = {ModuleVector({-f.diff_y()}), ModuleVector({f.diff_x()}), ModuleVector({f})};
  EfGenerators out{GeneratorKind::syzygy_raw, f, {}};
  for (const auto& s : syzygies(gens)) {
    OneForm w(s.components[0], s.components[1]);
    if (w.is_zero()) continue;
    if (!is_tangent(w, f)) throw InvariantViolation("syzygy projection " + w.to_string() + " is not tangent");
    out.forms.push_back(std::move(w));
  }
  return out;
}

OneForm omega_f(const MilnorAlgebra& ma, const Polynomial& theta) {
  const Polynomial& f = ma.f;
  Polynomial target = f * theta;
  Membership mem = membership(ModuleVector({target}), ma.gb);
  if (!mem.member) throw NotInJacobian("f*theta is not in jacob(f)");
  const Polynomial& a = mem.certificate[0];
  const Polynomial& b = mem.certificate[1];
  OneForm w(-b, a);
  if (!(wedge(exterior_derivative(f), w).coeff == target))
    throw InvariantViolation("df ^ omega_f differs from f*theta");
  return w;
}

EfGenerators four_generator_set(const Polynomial& f, const OneForm& omega) {
  EfGenerators out{GeneratorKind::four_generator, f, trivial_forms(f)};
  out.forms.insert(out.forms.begin() + 3, omega);
  for (const auto& w : out.forms)
    if (!is_tangent(w, f)) throw NotTangent(w.to_string() + " is not tangent to " + f.to_string());
  return out;
}

GenerationVerdict verify_generation(const EfGenerators& candidate, const EfGenerators& reference) {
  GenerationVerdict v;
  v.generates = true;
  if (candidate.forms.empty()) {
    for (std::size_t k = 0; k < reference.forms.size(); ++k)
      if (!reference.forms[k].is_zero()) {
        v.generates = false;
        v.witness_index = k;
        v.witness = reference.forms[k];
        return v;
      }
    return v;
  }
  GroebnerBasis gb = buchberger(as_vectors(candidate.forms), {}, true);
  for (std::size_t k = 0; k < reference.forms.size(); ++k) {
    Membership m = membership(ModuleVector::from_form(reference.forms[k]), gb);
    if (!m.member) {
      v.generates = false;
      v.witness_index = k;
      v.witness = reference.forms[k];
      v.certificates.clear();
      return v;
    }
    v.certificates.push_back(std::move(m.certificate));
  }
  return v;
}

bool same_module(const std::vector<OneForm>& a, const std::vector<OneForm>& b) {
  EfGenerators ga{GeneratorKind::candidate, Polynomial(), a};
  EfGenerators gb{GeneratorKind::candidate, Polynomial(), b};
  return verify_generation(ga, gb).generates && verify_generation(gb, ga).generates;
}

EfGenerators minimal_generators(const EfGenerators& gens) {
  if (gens.forms.empty()) throw ZeroInput("no generators to prune");
  std::vector<OneForm> pool;
  GroebnerBasis reduced = buchberger(as_vectors(gens.forms));
  for (const auto& v : reduced.generators()) pool.push_back(v.to_form());
  std::vector<std::pair<long, std::string>> keys;
  std::vector<std::size_t> idx(pool.size());
  for (std::size_t k = 0; k < pool.size(); ++k) {
    idx[k] = k;
    keys.emplace_back(max_total_degree(pool[k]), pool[k].to_string());
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<OneForm> sorted;
  for (auto k : idx) sorted.push_back(pool[k]);
  std::vector<bool> kept(sorted.size(), true);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    std::vector<ModuleVector> rest;
    for (std::size_t j = 0; j < sorted.size(); ++j)
      if (j != k && kept[j]) rest.push_back(ModuleVector::from_form(sorted[j]));
    if (rest.empty()) continue;
    if (membership(ModuleVector::from_form(sorted[k]), rest).member) kept[k] = false;
  }
  EfGenerators out{GeneratorKind::minimal, gens.f, {}};
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (kept[k]) out.forms.push_back(sorted[k]);
  return out;
}

SaitoVerdict saito_check(const OneForm& w0, const OneForm& w1, const Polynomial& f) {
  for (const auto* w : {&w0, &w1})
    if (!is_tangent(*w, f)) throw NotTangent(w->to_string() + " is not tangent to " + f.to_string());
  SaitoVerdict v;
  v.pair = {w0, w1};
  Polynomial c = wedge(w0, w1).coeff;
  if (c.is_zero() || f.is_zero()) return v;
  Scalar ratio = c.terms().front().c / f.terms().front().c;
  if (c == f * ratio) {
    v.free = true;
    v.constant = ratio;
  }
  return v;
}

EfGenerators smooth_shortcut(const Polynomial& f, const UniPoly& minpoly) {
  if (exponent(minpoly) > 0) throw NotSmooth("0 is a critical value of " + f.to_string());
  return {GeneratorKind::trivial_smooth, f, trivial_forms(f)};
}

EfGenerators smooth_shortcut(const Polynomial& f) {
  MilnorAlgebra ma = milnor_algebra(f, {}, false);
  return smooth_shortcut(f, min_poly_Af(build_Af(ma)));
}

std::pair<OneForm, OneForm> quasihomog_pair(const Polynomial& g, const Weights& w) {
  if (g.is_zero() || g.is_constant() || !g.is_weighted_homogeneous(w))
    throw NotHomogeneous(g.to_string() + " is not weighted homogeneous");
  const FieldSpec& field = g.field();
  Rational inv_d(1, *g.weighted_degree(w));
  Polynomial x = Polynomial::x(field), y = Polynomial::y(field);
  OneForm eta(y * Rational(-w.alpha2) * inv_d, x * Rational(w.alpha1) * inv_d);
  OneForm dg = exterior_derivative(g);
  if (!(wedge(dg, eta).coeff == g)) throw InvariantViolation("Euler identity failed for " + g.to_string());
  return {dg, eta};
}

}  // namespace invcurve
