#include "doctest.h"
#include "generators.hpp"
#include "invcurve/errors.hpp"
#include "invcurve/poly.hpp"
#include "invcurve/scalar.hpp"

using namespace invcurve;

TEST_CASE("rational arithmetic") {
  Scalar a(Rational(1, 2)), b(Rational(1, 3));
  CHECK((a + b).to_string() == "5/6");
  CHECK((a - b).to_string() == "1/6");
  CHECK((a * b).to_string() == "1/6");
  CHECK((a / b).to_string() == "3/2");
  CHECK(Scalar(Rational(2, 3)).inverse() == Scalar(Rational(3, 2)));
  CHECK_THROWS_AS(a / Scalar(0L), DivisionByZero);
  CHECK_THROWS_AS(Scalar(0L).inverse(), DivisionByZero);
  CHECK(Scalar(Rational(-4, 6)).to_string() == "-2/3");
}

TEST_CASE("gaussian rationals") {
  FieldSpec k = parse_field("z^2+1");
  CHECK(k.degree() == 2);
  Scalar z = Scalar::generator(k);
  CHECK(z * z == Scalar(-1L, k));
  CHECK(z.inverse() == -z);
  CHECK((z * z).to_string() == "-1");
  CHECK(k.describe() == "QQ[z]/(z^2+1)");
}

TEST_CASE("golden ratio field") {
  FieldSpec k = parse_field("z^2-z-1");
  Scalar z = Scalar::generator(k);
  CHECK(z * z == z + Scalar(1L, k));
  CHECK(z.inverse() == z - Scalar(1L, k));
  CHECK((z * z).to_string() == "z+1");
}

TEST_CASE("field spec validation") {
  CHECK_THROWS_AS(parse_field("2*z^2+1"), InvalidField);
  CHECK_THROWS_AS(parse_field("z^2+2*z+1"), InvalidField);  // (z+1)^2
  CHECK_THROWS_AS(parse_field("z+1"), InvalidField);
  CHECK_THROWS_AS(parse_field("z^2+x"), UnknownSymbol);
  CHECK_NOTHROW(parse_field("t^3-2", "t"));
}

TEST_CASE("reducible minimal polynomial shows up as a zero divisor") {
  // z^2-1 is squarefree but reducible
  FieldSpec k = parse_field("z^2-1");
  Scalar zm1 = Scalar::generator(k) - Scalar(1L, k);
  CHECK_THROWS_AS(zm1.inverse(), DivisionByZero);
}

TEST_CASE("mixing distinct extensions fails") {
  FieldSpec a = parse_field("z^2+1"), b = parse_field("z^2-2");
  CHECK_THROWS_AS(Scalar::generator(a) + Scalar::generator(b), FieldMismatch);
  // QQ embeds
  CHECK(Scalar::generator(a) + Scalar(1L) == Scalar::from_coeffs(a, {1, 1}));
}

TEST_CASE("field axioms on random samples") {
  testing::Gen gen(7);
  for (const FieldSpec& k : {FieldSpec{}, parse_field("z^2+1"), parse_field("z^3-z-1")}) {
    for (int n = 0; n < 100; ++n) {
      Scalar a = gen.scalar(k), b = gen.scalar(k), c = gen.scalar(k);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("scalar text round trip") {
  testing::Gen gen(11);
  FieldSpec k = parse_field("z^3-z-1");
  for (int n = 0; n < 100; ++n) {
    Scalar a = gen.scalar(k);
    Polynomial p = parse_poly(a.to_string(), k);
    CHECK(p == Polynomial::constant(a));
  }
  CHECK(Scalar::from_coeffs(k, {1, Rational(3, 2)}).to_string() == "3/2*z+1");
}
