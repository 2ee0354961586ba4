#include "invcurve/corpus.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <stdexcept>

#include "invcurve/errors.hpp"

namespace invcurve {

namespace {

Polynomial P(const char* s, const FieldSpec& f = {}) { return parse_poly(s, f); }
OneForm W(const char* p, const char* q, const FieldSpec& f = {}) { return OneForm(P(p, f), P(q, f)); }

class Recorder {
 public:
  explicit Recorder(FixtureResult& r) : r_(r) {}
  bool operator()(std::string name, bool ok, std::string detail = {}) {
    r_.facts.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  }

 private:
  FixtureResult& r_;
};

EfGenerators as_set(const Polynomial& f, std::vector<OneForm> forms) {
  return {GeneratorKind::candidate, f, std::move(forms)};
}

std::string blocks_text(const JordanProfile& p) { return p.to_string(); }

bool only_size_one(const JordanProfile& p) { return p.blocks.size() == 1 && p.blocks.begin()->first == 1; }

// Saito constant check against a frozen value.
void pair_facts(Recorder& fact, const Polynomial& f, const OneForm& w0, const OneForm& winf,
                const std::optional<Scalar>& expected) {
  bool t0 = is_tangent(w0, f), t1 = is_tangent(winf, f);
  fact("pair tangent", t0 && t1, std::string("omega_0 ") + (t0 ? "yes" : "no") + ", omega_inf " + (t1 ? "yes" : "no"));
  if (!(t0 && t1)) return;
  auto v = saito_check(w0, winf, f);
  std::string c = v.constant ? v.constant->to_string() : "none";
  if (expected)
    fact("wedge = " + expected->to_string() + " * f", v.free && *v.constant == *expected, "c = " + c);
  else
    fact("wedge = c * f, c nonzero", v.free, "c = " + c);
}

std::optional<JordanProfile> zero_profile(const Polynomial& f, MilnorAlgebra* keep = nullptr,
                                          MultOperator* keep_op = nullptr, UniPoly* keep_p = nullptr) {
  MilnorAlgebra ma;
  try {
    ma = milnor_algebra(f, {}, false);
  } catch (const InfiniteMilnor&) {
    return std::nullopt;
  }
  MultOperator op = build_Af(ma);
  UniPoly p = min_poly_Af(op);
  std::optional<JordanProfile> out;
  if (exponent(p) > 0) out = jordan_profile(op, UniPoly::variable(f.field()), p);
  if (keep) *keep = std::move(ma);
  if (keep_op) *keep_op = std::move(op);
  if (keep_p) *keep_p = std::move(p);
  return out;
}

void fixture_circle(FixtureResult& r) {
  Recorder fact(r);
  Polynomial f = P("x*y-1");
  r.f = f.to_string();
  AnalysisReport rep = analyze(f);
  fact("smooth path", rep.smooth && rep.exponent == 0, "min poly " + rep.minpoly.to_string());
  fact("f dx, f dy, df generate", rep.four_generates && rep.four_generates->generates);
  std::size_t count = rep.minimal ? rep.minimal->forms.size() : 0;
  fact("minimal generator count = 2", count == 2, std::to_string(count) + " generators");
  if (count != 2) return;
  auto [m0, minf] = oriented_pair(*rep.minimal);
  auto v = saito_check(m0, minf, f);
  fact("recovered pair is a Saito pair", v.free, v.constant ? "c = " + v.constant->to_string() : "");
  OneForm w0 = W("y^2", "1"), winf = W("x*y-1", "0");
  auto known = as_set(f, {w0, winf}), recovered = as_set(f, {m0, minf});
  fact("known pair in <recovered>", verify_generation(recovered, known).generates);
  fact("recovered pair in <known>", verify_generation(known, recovered).generates);
  pair_facts(fact, f, w0, winf, Scalar(-1));
  OneForm df = exterior_derivative(f);
  OneForm plus = P("x") * w0 + P("y") * winf;
  fact("df = x*omega_0 - y*omega_inf", df == P("x") * w0 - P("y") * winf,
       "with '+' the right side is " + plus.to_string());
  fact("f dy = f*omega_0 - y^2*omega_inf", OneForm(Polynomial(), f) == f * w0 - P("y^2") * winf);
}

void fixture_circle_qi(FixtureResult& r) {
  Recorder fact(r);
  FieldSpec qi = parse_field("z^2+1");
  Polynomial g = P("x^2+y^2-1", qi), h = P("x*y-1", qi);
  r.f = g.to_string() + " over " + qi.describe();
  Polynomial X = P("x+z*y", qi), Y = P("x-z*y", qi);
  fact("(x+zy)(x-zy) - 1 = x^2+y^2-1", h.compose(X, Y) == g);
  auto mh = minimal_generators(ef_from_syzygies(h));
  if (!fact("minimal count for xy-1 over QQ(z) = 2", mh.forms.size() == 2, std::to_string(mh.forms.size())))
    return;
  auto [h0, hinf] = oriented_pair(mh);
  OneForm c0 = pullback(h0, X, Y), cinf = pullback(hinf, X, Y);
  pair_facts(fact, g, c0, cinf, std::nullopt);
  auto raw = ef_from_syzygies(g);
  auto computed = as_set(g, {c0, cinf});
  std::size_t direct = minimal_generators(raw).forms.size();
  fact("transported pair generates E_f", verify_generation(computed, raw).generates,
       "direct greedy pruning leaves " + std::to_string(direct));
  OneForm p0 = W("x^2-y^2+1-2*z*x*y", "2*x*y+z*(x^2-y^2-1)", qi);
  OneForm pinf = W("x^2+y^2-1", "z*(x^2+y^2-1)", qi);
  pair_facts(fact, g, p0, pinf, std::nullopt);
  auto known = as_set(g, {p0, pinf});
  fact("known pair in <computed>", verify_generation(computed, known).generates);
  fact("computed pair in <known>", verify_generation(known, computed).generates);
}

void fixture_acampo(FixtureResult& r) {
  Recorder fact(r);
  Polynomial f = P("x^5+y^5-x^2*y^2");
  r.f = f.to_string();
  AnalysisReport rep = analyze(f);
  fact("mu = 16", rep.mu == 16, std::to_string(rep.mu));
  UniPoly expected = UniPoly::from_rationals({0, 0, Rational(16, 3125), 1});
  fact("min poly = t^2*(t+16/3125)", rep.minpoly == expected, rep.minpoly.to_string());
  fact("exponent = 2", rep.exponent == 2, std::to_string(rep.exponent));
  std::map<std::size_t, std::size_t> at0 = {{2, 1}, {1, 9}}, at1 = {{1, 5}};
  bool j0 = false, j1 = false;
  std::string d0, d1;
  for (const auto& p : rep.jordan) {
    if (p.eigen_factor == UniPoly::variable()) {
      j0 = p.blocks == at0;
      d0 = blocks_text(p);
      r.jordan_at_zero = p;
    } else if (p.eigen_factor == UniPoly::from_rationals({Rational(16, 3125), 1})) {
      j1 = p.blocks == at1;
      d1 = blocks_text(p);
    }
  }
  fact("Jordan at 0: one block of size 2, nine of size 1", j0, d0);
  fact("Jordan at t+16/3125: five blocks of size 1", j1, d1);
  fact("kernel condition fails", rep.kernel_condition && !*rep.kernel_condition);
  fact("df ^ omega_f = f * theta_f",
       rep.omega && rep.theta && wedge(exterior_derivative(f), *rep.omega).coeff == f * *rep.theta);
  r.four_generates = rep.four_generates->generates;
  fact("a syzygy generator is outside <f dx, f dy, df, omega_f>", !rep.four_generates->generates,
       rep.four_generates->witness ? "witness " + rep.four_generates->witness->to_string() : "");
  // derlog columns (P, Q) as forms P dy - Q dx
  std::vector<OneForm> derlog = {
      OneForm(-P("-25*x*y^3+5*x^3+4*y^2"), P("-25*x^2*y^2+6*x*y")),
      OneForm(-P("-25*x^2*y^2+6*x*y"), P("-25*x^3*y+5*y^3+4*x^2")),
      OneForm(-P("-5*x^3*y+2*y^3"), P("-5*x^4+3*x*y^2")),
  };
  auto known = as_set(f, derlog);
  fact("known generator omega_1 outside <f dx, f dy, df, omega_f>",
       !verify_generation(*rep.four, as_set(f, {derlog[0]})).generates);
  fact("omega_f in <known generators>", verify_generation(known, as_set(f, {*rep.omega})).generates);
  std::size_t count = rep.minimal->forms.size();
  fact("minimal generator count = 3", count == 3, std::to_string(count));
  fact("minimal set and known generators span the same module", same_module(rep.minimal->forms, derlog));
}

void fixture_quasi_homogeneous(FixtureResult& r, const char* g_text, Weights w) {
  Recorder fact(r);
  Polynomial g = P(g_text);
  r.f = g.to_string() + " weights (" + std::to_string(w.alpha1) + "," + std::to_string(w.alpha2) + ")";
  AnalysisReport rep = analyze(g, {w, false});
  auto [dg, eta] = quasihomog_pair(g, w);
  fact("dg ^ eta = g dx^dy", wedge(dg, eta).coeff == g);
  fact("{dg, eta} generates E_f", rep.qh_generates && *rep.qh_generates);
  for (const auto& p : rep.jordan)
    if (p.eigen_factor == UniPoly::variable()) r.jordan_at_zero = p;
  fact("Jordan blocks at 0 all of size 1", r.jordan_at_zero && only_size_one(*r.jordan_at_zero),
       r.jordan_at_zero ? blocks_text(*r.jordan_at_zero) : "no eigenvalue 0");
  fact("kernel condition holds", rep.kernel_condition && *rep.kernel_condition);
  if (rep.four_generates) r.four_generates = rep.four_generates->generates;
  fact("f dx, f dy, df, omega_f generate", r.four_generates && *r.four_generates);
  fact("Saito constant 1", rep.saito && rep.saito->free && *rep.saito->constant == Scalar(1));
}

void fixture_linsneto(FixtureResult& r) {
  Recorder fact(r);
  Polynomial f = P("(x^3-1)*(y^3-1)*(x^3-y^3)");
  r.f = f.to_string();
  OneForm w0 = W("-x^2*(y^3-1)", "(x^3-1)*y^2"), winf = W("-(y^4-y)", "x^4-x");
  pair_facts(fact, f, w0, winf, Scalar(-1));
  fact("swapped order gives the opposite sign", saito_check(winf, w0, f).constant == Scalar(1));
  MilnorAlgebra ma;
  MultOperator op;
  UniPoly p;
  r.jordan_at_zero = zero_profile(f, &ma, &op, &p);
  bool ones = r.jordan_at_zero && only_size_one(*r.jordan_at_zero);
  fact("Jordan blocks at 0 all of size 1", ones,
       "mu = " + std::to_string(ma.mu) + ", " + (r.jordan_at_zero ? blocks_text(*r.jordan_at_zero) : "none"));
  if (ones) {
    Polynomial theta = theta_f(ma, op, p);
    OneForm omega = omega_f(ma, theta);
    auto four = four_generator_set(f, omega);
    auto raw = ef_from_syzygies(f);
    r.four_generates = verify_generation(four, raw).generates;
    fact("f dx, f dy, df, omega_f generate", *r.four_generates);
    auto mn = minimal_generators(raw);
    fact("minimal generator count = 2", mn.forms.size() == 2, std::to_string(mn.forms.size()));
    fact("minimal set and known pair span the same module", same_module(mn.forms, {w0, winf}));
  }
}

void fixture_known_pair(FixtureResult& r, const Polynomial& f, const OneForm& w0, const OneForm& winf,
                        const Scalar& c) {
  Recorder fact(r);
  r.f = f.to_string();
  pair_facts(fact, f, w0, winf, c);
  fact("pair generates E_f", verify_generation(as_set(f, {w0, winf}), ef_from_syzygies(f)).generates);
  r.jordan_at_zero = zero_profile(f);
}

void fixture_rose(FixtureResult& r) {
  Polynomial f = P("4*x^4+8*x^2*y^2+4*y^4-4*x^6-12*x^4*y^2-12*x^2*y^4-4*y^6-y^2");
  OneForm w0 = W("8*x^3-x*y^2", "11*x^2*y+2*y^3-y"), winf = W("5*x^2*y-4*y^3+2*y", "x^3+10*x*y^2-x");
  fixture_known_pair(r, f, w0, winf, Scalar(-2));
  Recorder fact(r);
  Polynomial n = P("(x^2+y^2-1/3)^3"), d = P("36*x^2+9*y^2-4");
  OneForm dF = d * exterior_derivative(n) - n * exterior_derivative(d);
  fact("(D dN - N dD) ^ omega_0 = 0", wedge(dF, w0).coeff.is_zero());
  Polynomial X = P("x^2"), Y = P("y^2");
  OneForm c0 = W("8*x-y", "11*x+2*y-1"), cinf = W("5*x*y-4*y^2+2*y", "x^2+10*x*y-x");
  fact("pullback of the first form = 2 omega_0", pullback(c0, X, Y) == Scalar(2) * w0);
  fact("pullback of the second form = 2xy omega_inf", pullback(cinf, X, Y) == P("2*x*y") * winf);
}

void fixture_graph(FixtureResult& r, int d, unsigned seed) {
  Recorder fact(r);
  Polynomial p = seeded_univariate(d, seed);
  Polynomial F = Polynomial::y() - p;
  r.f = F.to_string();
  auto raw = ef_from_syzygies(F);
  auto mn = minimal_generators(raw);
  fact("minimal generator count = 2", mn.forms.size() == 2, std::to_string(mn.forms.size()));
  if (mn.forms.size() == 2) {
    auto [m0, minf] = oriented_pair(mn);
    auto v = saito_check(m0, minf, F);
    fact("minimal pair: wedge = c * (y - f(x))", v.free, v.constant ? "c = " + v.constant->to_string() : "");
  }
  auto pattern = graph_degree_pattern(d);
  auto pair = graph_pattern_pair(p, pattern);
  std::string pat;
  for (long e : pattern) pat += (pat.empty() ? "" : ",") + std::to_string(e);
  if (!fact("pair with degree pattern (" + pat + ") exists", pair.has_value())) return;
  fact("pattern pair spans the minimal module", same_module({pair->omega0, pair->omega_inf}, mn.forms));
  fact("pattern pair: wedge = y - f(x)", wedge(pair->omega0, pair->omega_inf).coeff == F);
  auto split = [](const OneForm& w) {
    Polynomial y = Polynomial::y();
    Polynomial b1, b2;
    for (const auto& t : w.P.terms()) {
      if (t.m.j == 1) b1 += Polynomial::monomial({t.m.i, 0}, t.c);
      if (t.m.j == 0) b2 += Polynomial::monomial(t.m, t.c);
    }
    return std::array<Polynomial, 3>{b1, b2, w.Q};
  };
  auto a = split(pair->omega0), b = split(pair->omega_inf);
  Polynomial dp = p.diff_x();
  fact("a1 b2 - a2 b1 = -f'", a[0] * b[1] - a[1] * b[0] == -dp);
  fact("a1 b3 - a3 b1 = 1", a[0] * b[2] - a[2] * b[0] == P("1"));
  fact("a2 b3 - a3 b2 = -f", a[1] * b[2] - a[2] * b[1] == -p);
  fact("f a1 + a2 + f' a3 = 0", (p * a[0] + a[1] + dp * a[2]).is_zero());
}

void fixture_riccati(FixtureResult& r) {
  Recorder fact(r);
  Polynomial f = P("x^3-x");
  r.f = f.to_string();
  OneForm w0 = W("1", "0"), winf = OneForm(Polynomial(), f);
  pair_facts(fact, f, w0, winf, Scalar(1));
  auto raw = ef_from_syzygies(f);
  fact("pair generates E_f", verify_generation(as_set(f, {w0, winf}), raw).generates);
  OneForm riccati = OneForm(P("y^2+x"), f);
  auto m = verify_generation(as_set(f, {w0, winf}), as_set(f, {riccati}));
  fact("Riccati form in <pair>", m.generates);
  fact("minimal generator count = 2", minimal_generators(raw).forms.size() == 2);
}

void fixture_mendes_pereira(FixtureResult& r) {
  Recorder fact(r);
  FieldSpec k = parse_field("z^2-z-1");
  Polynomial f = P("(x^2-1)*(y^2-1)*(x^2-(2*z+1)^2)*(y^2-(2*z+1)^2)*(x^2-y^2)"
                   "*(y+1+(z-1)*(x+1))*(y+1+z*(x+1))*(y-1+z*(x-1))*(y-1+(z-1)*(x-1))",
                   k);
  r.f = "ten lines over " + k.describe();
  OneForm w0(P("-(y^2-(2*z+1)^2)*(y^2-1)*(y+(2*z-1)*x)", k), P("(x^2-(2*z+1)^2)*(x^2-1)*(x+(2*z-1)*y)", k));
  fact("omega_0 tangent", is_tangent(w0, f));
}

using FixtureFn = std::function<void(FixtureResult&)>;

const std::vector<std::pair<std::string, FixtureFn>>& registry() {
  static const std::vector<std::pair<std::string, FixtureFn>> fixtures = {
      {"circle", fixture_circle},
      {"circle_qi", fixture_circle_qi},
      {"acampo", fixture_acampo},
      {"qh_x3_y3", [](FixtureResult& r) { fixture_quasi_homogeneous(r, "x^3+y^3", {}); }},
      {"qh_x4_y4", [](FixtureResult& r) { fixture_quasi_homogeneous(r, "x^4+y^4", {}); }},
      {"qh_x2_y3", [](FixtureResult& r) { fixture_quasi_homogeneous(r, "x^2+y^3", {3, 2}); }},
      {"qh_xy", [](FixtureResult& r) { fixture_quasi_homogeneous(r, "x*y", {}); }},
      {"linsneto", fixture_linsneto},
      {"lissajous",
       [](FixtureResult& r) {
         fixture_known_pair(r, P("2*(2*x^2-1)^2+(2*y+1)^2*(y-1)"),
                            W("-16*x*y^2+8*x*y+8*x", "12*x^2*y-6*x^2-6*y+3"),
                            W("-16*x^2*y+8*y^2+4*y-4", "12*x^3-6*x*y-9*x"), Scalar(12));
       }},
      {"deltoid",
       [](FixtureResult& r) {
         fixture_known_pair(r, P("(x^2+y^2)^2+8*x*(x^2-3*y^2)+18*(x^2+y^2)-27"),
                            W("x^2-3*y^2+6*x+9", "4*x*y-6*y"), W("-4*x*y+6*y", "3*x^2-y^2+6*x-9"), Scalar(3));
       }},
      {"rose", fixture_rose},
      {"graph4", [](FixtureResult& r) { fixture_graph(r, 4, 4); }},
      {"graph5", [](FixtureResult& r) { fixture_graph(r, 5, 5); }},
      {"riccati", fixture_riccati},
      {"mendes_pereira", fixture_mendes_pereira},
  };
  return fixtures;
}

}  // namespace

bool FixtureResult::passed() const {
  if (!error.empty() || facts.empty()) return false;
  for (const auto& f : facts)
    if (!f.passed) return false;
  return true;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

FixtureResult run_fixture(const std::string& name) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    FixtureResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(r);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw std::out_of_range("unknown fixture '" + name + "'");
}

std::vector<FixtureResult> run_corpus(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    auto all = fixture_names();
    if (std::find(all.begin(), all.end(), n) == all.end()) throw std::out_of_range("unknown fixture '" + n + "'");
  }
  std::vector<std::future<FixtureResult>> tasks;
  for (const auto& n : names) tasks.push_back(std::async(std::launch::async, run_fixture, n));
  std::vector<FixtureResult> out;
  for (auto& t : tasks) out.push_back(t.get());
  return out;
}

Polynomial seeded_univariate(int degree, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5), lead(1, 5);
  Polynomial p;
  for (int k = 0; k < degree; ++k) p += Polynomial::monomial({static_cast<std::uint32_t>(k), 0}, Scalar(coef(rng)));
  p += Polynomial::monomial({static_cast<std::uint32_t>(degree), 0}, Scalar(lead(rng)));
  return p;
}

std::array<long, 6> graph_degree_pattern(int d) {
  if (d % 2 == 0) return {d / 2 - 2, d / 2, d / 2 - 1, d / 2 - 1, d / 2, d / 2};
  return {(d - 3) / 2, (d - 1) / 2, (d - 1) / 2, (d - 5) / 2, (d + 1) / 2, (d - 3) / 2};
}

namespace {

Polynomial x_poly(const std::vector<Scalar>& c, std::size_t from, long deg) {
  Polynomial p;
  for (long k = 0; k <= deg; ++k)
    p += Polynomial::monomial({static_cast<std::uint32_t>(k), 0}, c[from + static_cast<std::size_t>(k)]);
  return p;
}

// Forms (y c1 + c2) dx + c3 dy tangent to y - p with deg c_i <= e_i, as
// candidates with all three degrees exact.
std::vector<OneForm> shaped_forms(const Polynomial& p, long e1, long e2, long e3) {
  Polynomial dp = p.diff_x();
  std::size_t n1 = static_cast<std::size_t>(e1 + 1), n3 = static_cast<std::size_t>(e3 + 1);
  std::vector<Polynomial> cols;
  for (long k = 0; k <= e1; ++k) cols.push_back(p.shifted({static_cast<std::uint32_t>(k), 0}, Scalar(1)));
  for (long k = 0; k <= e3; ++k) cols.push_back(dp.shifted({static_cast<std::uint32_t>(k), 0}, Scalar(1)));
  long top = 0;
  for (const auto& c : cols) top = std::max(top, c.degree_x());
  std::vector<long> rows;
  for (long k = e2 + 1; k <= top; ++k) rows.push_back(k);
  MatrixK m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows.size(); ++r)
      m(r, c) = cols[c].coefficient({static_cast<std::uint32_t>(rows[r]), 0});
  auto basis = kernel_basis(m);
  std::vector<std::vector<Scalar>> trials = basis;
  if (basis.size() > 1) {
    std::vector<Scalar> mix(n1 + n3, Scalar(0));
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t k = 0; k < mix.size(); ++k) mix[k] += Scalar(static_cast<long>(b + 1)) * basis[b][k];
    trials.push_back(mix);
  }
  std::vector<OneForm> out;
  Polynomial y = Polynomial::y();
  for (const auto& v : trials) {
    Polynomial c1 = x_poly(v, 0, e1), c3 = x_poly(v, n1, e3);
    Polynomial c2 = -(p * c1 + dp * c3);
    if (c1.degree_x() != e1 || c2.degree_x() != e2 || c3.degree_x() != e3) continue;
    out.emplace_back(y * c1 + c2, c3);
  }
  return out;
}

}  // namespace

std::optional<GraphPair> graph_pattern_pair(const Polynomial& p, const std::array<long, 6>& e) {
  Polynomial F = Polynomial::y() - p;
  auto first = shaped_forms(p, e[0], e[1], e[2]);
  auto second = shaped_forms(p, e[3], e[4], e[5]);
  for (const auto& w0 : first)
    for (const auto& winf : second) {
      auto v = saito_check(w0, winf, F);
      if (!v.free) continue;
      return GraphPair{w0, v.constant->inverse() * winf, e};
    }
  return std::nullopt;
}

}  // namespace invcurve
