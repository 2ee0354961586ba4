#include "doctest.h"
#include "generators.hpp"
#include "invcurve/errors.hpp"
#include "invcurve/milnor.hpp"

using namespace invcurve;
using invcurve::testing::Gen;

namespace {

Polynomial P(const char* s) { return parse_poly(s); }

// Multiplication by an arbitrary polynomial on V_f.
MatrixK mult_matrix(const MilnorAlgebra& ma, const Polynomial& h) {
  MatrixK m(ma.mu, ma.mu, ma.f.field());
  for (std::size_t c = 0; c < ma.mu; ++c) {
    auto coords = ma.coordinates(ma.reduce(h.shifted(ma.basis[c], Scalar::one(ma.f.field()))));
    for (std::size_t r = 0; r < ma.mu; ++r) m(r, c) = coords[r];
  }
  return m;
}

// Oracle for A_f: evaluate f at the commuting operators X, Y by expanding
// every monomial as a product of matrices.
MatrixK f_of_xy(const MilnorAlgebra& ma) {
  MatrixK X = mult_matrix(ma, Polynomial::x()), Y = mult_matrix(ma, Polynomial::y());
  MatrixK out(ma.mu, ma.mu, ma.f.field());
  for (const auto& t : ma.f.terms()) {
    MatrixK m = MatrixK::identity(ma.mu, ma.f.field());
    for (std::uint32_t k = 0; k < t.m.i; ++k) m = m * X;
    for (std::uint32_t k = 0; k < t.m.j; ++k) m = m * Y;
    out += t.c * m;
  }
  return out;
}

// Random tame polynomial: x^n + c*y^n plus terms of lower degree.
Polynomial random_tame(Gen& g, int n) {
  Polynomial f = Polynomial::x().pow(n) + Polynomial::y().pow(n) * Rational(g.integer(1, 3));
  for (int k = 0; k < 3; ++k) {
    auto i = static_cast<std::uint32_t>(g.integer(0, n - 1));
    auto j = static_cast<std::uint32_t>(g.integer(0, n - 1 - static_cast<long>(i)));
    f += Polynomial::monomial({i, j}, Scalar(g.integer(-3, 3)));
  }
  return f;
}

}  // namespace

TEST_CASE("tameness examples") {
  auto v = check_tame(P("x^5+y^5-x^2*y^2"), {});
  CHECK(v.tame);
  CHECK(v.g == P("x^5+y^5"));
  CHECK_FALSE(check_tame(P("x^2*y"), {}).tame);
  v = check_tame(P("x*y-1"), {});
  CHECK(v.tame);
  CHECK(v.g == P("x*y"));
  CHECK(check_tame(P("x^3+y^2"), {2, 3}).tame);
  CHECK_FALSE(check_tame(P("x^3+y^2"), {}).tame);
  CHECK_THROWS_AS(check_tame(Polynomial(), {}), ZeroInput);
  CHECK_THROWS_AS(milnor_algebra(P("x^2*y")), NotTame);
}

TEST_CASE("Milnor algebra examples") {
  auto ma = milnor_algebra(P("x^3+y^3"));
  CHECK(ma.mu == 4);
  CHECK(ma.basis == std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(ma.top_degree == 2);
  CHECK(ma.g_top_unique);
  CHECK(ma.f_top_unique);
  CHECK(milnor_algebra(P("x^5+y^5-x^2*y^2")).mu == 16);
  ma = milnor_algebra(P("x^2+y^2-1"));
  CHECK(ma.mu == 1);
  CHECK(ma.basis == std::vector<Monomial>{{0, 0}});
  CHECK(milnor_algebra(P("x^3+y^2"), {2, 3}).mu == 2);
}

TEST_CASE("multiplication operator examples") {
  auto ma = milnor_algebra(P("x^2+y^2-1"));
  auto op = build_Af(ma);
  REQUIRE(op.matrix.rows() == 1);
  CHECK(op.matrix(0, 0) == Scalar(-1));
  CHECK(min_poly_Af(op).to_string() == "t+1");
  op = build_Af(milnor_algebra(P("x*y-1")));
  CHECK(op.matrix(0, 0) == Scalar(-1));
  op = build_Af(milnor_algebra(P("x^3+y^3")));
  CHECK(op.matrix.is_zero());
  CHECK(min_poly_Af(op).to_string() == "t");
}

TEST_CASE("critical values and exponent") {
  UniPoly acampo = UniPoly::from_rationals({0, 0, Rational(16, 3125), 1});
  auto cv = critical_value_factors(acampo);
  REQUIRE(cv.size() == 2);
  CHECK(cv[0].factor.to_string() == "t");
  CHECK(cv[0].multiplicity == 2);
  CHECK(*cv[0].root == Scalar(0));
  CHECK(cv[1].factor.to_string() == "t+16/3125");
  CHECK(*cv[1].root == Scalar(Rational(-16, 3125)));
  CHECK(exponent(acampo) == 2);
  UniPoly circle = UniPoly::from_rationals({1, 1});
  cv = critical_value_factors(circle);
  REQUIRE(cv.size() == 1);
  CHECK(*cv[0].root == Scalar(-1));
  CHECK(exponent(circle) == 0);
  cv = critical_value_factors(UniPoly::variable());
  REQUIRE(cv.size() == 1);
  CHECK(cv[0].multiplicity == 1);
  CHECK(exponent(UniPoly::variable()) == 1);
  // irrational roots stay as an unfactored squarefree factor
  cv = critical_value_factors(UniPoly::from_rationals({0, -2, 0, 1}));
  REQUIRE(cv.size() == 2);
  CHECK(cv[1].factor.to_string() == "t^2-2");
  CHECK_FALSE(cv[1].root.has_value());
}

TEST_CASE("A'Campo spectral data") {
  auto ma = milnor_algebra(P("x^5+y^5-x^2*y^2"));
  auto op = build_Af(ma);
  CHECK(op.matrix == f_of_xy(ma));
  UniPoly p = min_poly_Af(op);
  CHECK(p == UniPoly::from_rationals({0, 0, Rational(16, 3125), 1}));
  CHECK(rank(op.matrix) == 6);
  CHECK(kernel_basis(op.matrix).size() == 10);
  UniPoly t = UniPoly::variable();
  auto j0 = jordan_profile(op, t, p);
  CHECK(j0.blocks == std::map<std::size_t, std::size_t>{{1, 9}, {2, 1}});
  UniPoly h = UniPoly::from_rationals({Rational(16, 3125), 1});
  CHECK(rank(eval_matrix_poly(h, op.matrix)) == 11);
  auto j1 = jordan_profile(op, h, p);
  CHECK(j1.blocks == std::map<std::size_t, std::size_t>{{1, 5}});
  CHECK(j0.dimension() + j1.dimension() == ma.mu);
  CHECK(jordan_blocks_bounded(j0));
  CHECK_THROWS_AS(jordan_profile(op, UniPoly::from_rationals({1, 1}), p), FactorNotDividing);

  Polynomial theta = theta_f(ma, op, p);
  CHECK(ma.reduce(ma.f * theta).is_zero());
  CHECK_FALSE(ma.reduce(theta).is_zero());
  CHECK(*theta.weighted_degree(ma.weights) <= ma.top_degree);
  CHECK_FALSE(check_kernel_condition(ma, op, theta));
  CHECK_THROWS_AS(check_kernel_condition(ma, op, P("1")), NotInKernel);
}

TEST_CASE("theta and kernel condition examples") {
  auto ma = milnor_algebra(P("x^3+y^3"));
  auto op = build_Af(ma);
  UniPoly p = min_poly_Af(op);
  Polynomial theta = theta_f(ma, op, p);
  CHECK(theta == P("1"));
  CHECK(check_kernel_condition(ma, op, theta));
  CHECK(jordan_profile(op, UniPoly::variable(), p).blocks == std::map<std::size_t, std::size_t>{{1, 4}});
  auto circle = milnor_algebra(P("x^2+y^2-1"));
  auto cop = build_Af(circle);
  CHECK_THROWS_AS(theta_f(circle, cop, min_poly_Af(cop)), SmoothCurve);
  CHECK(jordan_blocks_bounded(JordanProfile{UniPoly::variable(), {{1, 3}, {2, 1}}, {}}));
  CHECK_FALSE(jordan_blocks_bounded(JordanProfile{UniPoly::variable(), {{2, 3}}, {}}));
  CHECK_FALSE(jordan_blocks_bounded(JordanProfile{UniPoly::variable(), {{1, 3}, {3, 1}}, {}}));
}

TEST_CASE("Milnor algebra properties on random tame polynomials") {
  Gen g(99);
  for (int trial = 0; trial < 100; ++trial) {
    int n = trial % 2 == 0 ? 3 : 4;
    Polynomial f = random_tame(g, n);
    CAPTURE(f);
    auto ma = milnor_algebra(f);
    CHECK(ma.mu == static_cast<std::size_t>((n - 1) * (n - 1)));
    CHECK(ma.mu_g == ma.mu);
    CHECK(ma.g_top_unique);
    for (const auto& m : ma.basis) CHECK(m.weighted_degree(ma.weights) <= ma.top_degree);
    auto op = build_Af(ma);
    CHECK(op.matrix == f_of_xy(ma));
    UniPoly p = min_poly_Af(op);
    CHECK(p.is_monic());
    CHECK(eval_matrix_poly(p, op.matrix).is_zero());
    std::size_t total = 0;
    for (const auto& cf : critical_value_factors(p)) {
      CHECK_FALSE(eval_matrix_poly(divmod(p, cf.factor).quotient, op.matrix).is_zero());
      auto prof = jordan_profile(op, cf.factor, p);
      CHECK(prof.largest_block() == cf.multiplicity);
      total += prof.dimension();
    }
    CHECK(total == ma.mu);
    if (exponent(p) > 0) {
      Polynomial theta = theta_f(ma, op, p);
      CHECK(ma.reduce(f * theta).is_zero());
      CHECK_FALSE(ma.reduce(theta).is_zero());
      auto prof = jordan_profile(op, UniPoly::variable(), p);
      CHECK(jordan_blocks_bounded(prof));
      // kernel condition holds exactly when all blocks at 0 are equal in size
      bool uniform = prof.blocks.size() == 1;
      CHECK(check_kernel_condition(ma, op, theta) == uniform);
    }
  }
}
