#include "invcurve/milnor.hpp"

#include <sstream>

#include "invcurve/errors.hpp"

namespace invcurve {

namespace {

std::vector<ModuleVector> jacobian_gens(const Polynomial& f) {
  return {ModuleVector({f.diff_x()}), ModuleVector({f.diff_y()})};
}

// Standard monomials of a rank-1 basis, or nothing when infinitely many.
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  for (const auto& lt : gb.leading_terms()) leads.push_back(lt.m);
  std::optional<std::uint32_t> xbound, ybound;
  for (const auto& m : leads) {
    if (m.j == 0 && (!xbound || m.i < *xbound)) xbound = m.i;
    if (m.i == 0 && (!ybound || m.j < *ybound)) ybound = m.j;
  }
  if (!xbound || !ybound) return std::nullopt;
  std::vector<Monomial> out;
  for (std::uint32_t i = 0; i < *xbound; ++i)
    for (std::uint32_t j = 0; j < *ybound; ++j) {
      Monomial m{i, j};
      bool standard = true;
      for (const auto& l : leads)
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) out.push_back(m);
    }
  const MonomialOrder& ord = gb.order().base;
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
  return out;
}

bool top_unique(const std::vector<Monomial>& basis, const Weights& w, long top) {
  std::size_t at_top = 0;
  for (const auto& m : basis) {
    long deg = m.weighted_degree(w);
    if (deg > top) return false;
    if (deg == top) ++at_top;
  }
  return at_top == 1;
}

}  // namespace

TameVerdict check_tame(const Polynomial& f, const Weights& w) {
  if (f.is_zero()) throw ZeroInput("tameness of the zero polynomial");
  TameVerdict v;
  v.g = f.leading_form(w);
  if (f.is_constant()) {
    v.reason = "constant polynomial";
    return v;
  }
  GroebnerBasis gb = buchberger(jacobian_gens(v.g), ModuleOrder(MonomialOrder(w)));
  if (standard_monomials(gb)) {
    v.tame = true;
  } else {
    v.reason = "Milnor algebra of the leading form " + v.g.to_string() + " is infinite dimensional";
  }
  return v;
}

MilnorAlgebra milnor_algebra(const Polynomial& f, const Weights& w, bool require_tame) {
  TameVerdict tv = check_tame(f, w);
  if (!tv.tame && require_tame) throw NotTame(tv.reason);
  MilnorAlgebra ma;
  ma.f = f;
  ma.weights = w;
  ma.d = *f.weighted_degree(w);
  ma.tame = tv.tame;
  ma.top_degree = 2 * ma.d - 2 * w.alpha1 - 2 * w.alpha2;
  ModuleOrder order{MonomialOrder(w)};
  ma.gb = buchberger(jacobian_gens(f), order, true);
  auto basis = standard_monomials(ma.gb);
  if (!basis) throw InfiniteMilnor("Milnor algebra of " + f.to_string() + " is infinite dimensional");
  ma.basis = std::move(*basis);
  ma.mu = ma.basis.size();
  for (std::size_t k = 0; k < ma.mu; ++k) ma.index_.emplace(ma.basis[k], k);
  ma.f_top_unique = top_unique(ma.basis, w, ma.top_degree);
  if (tv.tame) {
    auto gbasis = standard_monomials(buchberger(jacobian_gens(tv.g), order));
    ma.mu_g = gbasis->size();
    ma.g_top_unique = top_unique(*gbasis, w, ma.top_degree);
    if (*ma.mu_g != ma.mu)
      throw InvariantViolation("dim V_f = " + std::to_string(ma.mu) + " but dim V_g = " + std::to_string(*ma.mu_g));
  }
  return ma;
}

std::vector<Scalar> MilnorAlgebra::coordinates(const Polynomial& reduced) const {
  std::vector<Scalar> out(mu, Scalar::zero(f.field()));
  for (const auto& t : reduced.terms()) {
    auto it = index_.find(t.m);
    if (it == index_.end()) throw InvariantViolation("monomial " + t.m.to_string() + " outside the Milnor basis");
    out[it->second] = t.c;
  }
  return out;
}

Polynomial MilnorAlgebra::from_coordinates(const std::vector<Scalar>& coords) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) terms.push_back({basis[k], coords[k]});
  return Polynomial(f.field(), std::move(terms));
}

MultOperator build_Af(const MilnorAlgebra& ma) {
  MultOperator op{MatrixK(ma.mu, ma.mu, ma.f.field())};
  for (std::size_t c = 0; c < ma.mu; ++c) {
    Polynomial image = ma.reduce(ma.f.shifted(ma.basis[c], Scalar::one(ma.f.field())));
    auto coords = ma.coordinates(image);
    for (std::size_t r = 0; r < ma.mu; ++r) op.matrix(r, c) = coords[r];
  }
  return op;
}

UniPoly min_poly_Af(const MultOperator& op) { return minimal_polynomial(op.matrix); }

unsigned exponent(const UniPoly& p) {
  unsigned m = 0;
  const auto& c = p.coefficients();
  while (m < c.size() && c[m].is_zero()) ++m;
  return m;
}

std::vector<CriticalFactor> critical_value_factors(const UniPoly& p) {
  std::vector<CriticalFactor> out;
  unsigned m = exponent(p);
  const FieldSpec& field = p.field();
  if (m > 0) out.push_back({UniPoly::variable(field), m, Scalar::zero(field)});
  std::vector<Scalar> rest(p.coefficients().begin() + m, p.coefficients().end());
  for (auto& [factor, mult] : squarefree_decompose(UniPoly(std::move(rest), field))) {
    CriticalFactor cf{factor, mult, std::nullopt};
    if (factor.degree() == 1) cf.root = -factor.coefficient(0);
    out.push_back(std::move(cf));
  }
  return out;
}

std::size_t JordanProfile::dimension() const {
  std::size_t n = 0;
  for (auto [size, count] : blocks) n += size * count;
  return n;
}

std::size_t JordanProfile::block_count() const {
  std::size_t n = 0;
  for (auto [size, count] : blocks) n += count;
  return n;
}

std::size_t JordanProfile::largest_block() const { return blocks.empty() ? 0 : blocks.rbegin()->first; }

std::string JordanProfile::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    if (!first) out << ", ";
    out << "size " << it->first << ": x" << it->second;
    first = false;
  }
  out << "}";
  return out.str();
}

JordanProfile jordan_profile(const MultOperator& op, const UniPoly& h, const UniPoly& minpoly) {
  if (h.degree() < 1 || !divmod(minpoly, h).remainder.is_zero())
    throw FactorNotDividing(h.to_string() + " does not divide " + minpoly.to_string());
  JordanProfile prof;
  prof.eigen_factor = h.monic();
  const MatrixK& a = op.matrix;
  MatrixK hk = eval_matrix_poly(prof.eigen_factor, a);
  MatrixK power = MatrixK::identity(a.rows(), a.field());
  prof.ranks.push_back(a.rows());
  for (;;) {
    power = power * hk;
    std::size_t r = rank(power);
    if (r == prof.ranks.back()) break;
    prof.ranks.push_back(r);
  }
  // at_least[k-1] = number of blocks of size >= k
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < prof.ranks.size(); ++k) at_least.push_back(prof.ranks[k - 1] - prof.ranks[k]);
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    std::size_t exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    if (exact > 0) prof.blocks[k + 1] = exact;
  }
  return prof;
}

JordanProfile jordan_profile(const MultOperator& op, const UniPoly& h) {
  return jordan_profile(op, h, min_poly_Af(op));
}

bool jordan_blocks_bounded(const JordanProfile& at_zero) {
  if (at_zero.largest_block() >= 3) return false;
  return !(at_zero.blocks.size() == 1 && at_zero.blocks.begin()->first == 2);
}

Polynomial theta_f(const MilnorAlgebra& ma, const MultOperator& op, const UniPoly& minpoly) {
  if (exponent(minpoly) == 0) throw SmoothCurve("0 is not a critical value of " + ma.f.to_string());
  UniPoly q = divmod(minpoly, UniPoly::variable(minpoly.field())).quotient;
  std::vector<Scalar> one = ma.coordinates(Polynomial::constant(Rational(1), ma.f.field()));
  return ma.from_coordinates(apply_matrix_poly(q, op.matrix, one));
}

bool check_kernel_condition(const MilnorAlgebra& ma, const MultOperator& op, const Polynomial& theta) {
  std::vector<Scalar> tc = ma.coordinates(ma.reduce(theta));
  for (const auto& s : op.matrix.apply(tc))
    if (!s.is_zero()) throw NotInKernel(theta.to_string() + " is not in the kernel of A_f");
  MatrixK mt(ma.mu, ma.mu, ma.f.field());
  for (std::size_t c = 0; c < ma.mu; ++c) {
    auto coords = ma.coordinates(ma.reduce(theta.shifted(ma.basis[c], Scalar::one(ma.f.field()))));
    for (std::size_t r = 0; r < ma.mu; ++r) mt(r, c) = coords[r];
  }
  return rank(mt) == ma.mu - rank(op.matrix);
}

}  // namespace invcurve
