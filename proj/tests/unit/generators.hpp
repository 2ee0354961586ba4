#pragma once

#include <algorithm>
#include <random>

#include "invcurve/poly.hpp"

namespace invcurve::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 5) {
    long den = integer(1, bound);
    return Rational(integer(-bound, bound), den);
  }

  Scalar scalar(const FieldSpec& field, long bound = 5) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < field.degree(); ++k) c.push_back(rational(bound));
    return Scalar::from_coeffs(field, std::move(c));
  }

  Scalar nonzero_scalar(const FieldSpec& field) {
    for (;;) {
      Scalar s = scalar(field);
      if (!s.is_zero()) return s;
    }
  }

  Polynomial poly(const FieldSpec& field, int max_deg = 3, int max_terms = 4) {
    std::vector<Term> terms;
    int n = static_cast<int>(integer(0, max_terms));
    for (int k = 0; k < n; ++k) {
      auto i = static_cast<std::uint32_t>(integer(0, max_deg));
      auto j = static_cast<std::uint32_t>(integer(0, max_deg - static_cast<long>(i)));
      terms.push_back({{i, j}, scalar(field, 3)});
    }
    return Polynomial(field, std::move(terms));
  }

  Polynomial nonzero_poly(const FieldSpec& field, int max_deg = 3, int max_terms = 4) {
    for (;;) {
      Polynomial p = poly(field, max_deg, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace invcurve::testing

#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<invcurve::Scalar> {
  static String convert(const invcurve::Scalar& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<invcurve::Polynomial> {
  static String convert(const invcurve::Polynomial& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<invcurve::OneForm> {
  static String convert(const invcurve::OneForm& w) { return w.to_string().c_str(); }
};
}  // namespace doctest
