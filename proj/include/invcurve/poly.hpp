#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invcurve/scalar.hpp"

namespace invcurve {

/// Weights of x and y in the graded ring; both must be >= 1.
struct Weights {
  long alpha1 = 1;
  long alpha2 = 1;

  Weights() = default;
  Weights(long a1, long a2);

  friend bool operator==(const Weights&, const Weights&) = default;
};

/// x^i y^j. Exponent arithmetic is overflow checked.
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  bool divides(const Monomial& o) const noexcept { return i <= o.i && j <= o.j; }
  bool coprime_with(const Monomial& o) const noexcept {
    return (i == 0 || o.i == 0) && (j == 0 || o.j == 0);
  }
  long total_degree() const noexcept { return static_cast<long>(i) + static_cast<long>(j); }
  long weighted_degree(const Weights& w) const noexcept {
    return static_cast<long>(i) * w.alpha1 + static_cast<long>(j) * w.alpha2;
  }

  Monomial operator*(const Monomial& o) const;
  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const noexcept { return {i - o.i, j - o.j}; }
  static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    return {a.i > b.i ? a.i : b.i, a.j > b.j ? a.j : b.j};
  }

  std::string to_string() const;
};

/// Weighted degree, ties broken reverse-lexicographically with x > y.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(Weights w) : weights_(w) {}

  const Weights& weights() const noexcept { return weights_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    long da = a.weighted_degree(weights_), db = b.weighted_degree(weights_);
    if (da != db) return da < db ? -1 : 1;
    if (a.j != b.j) return a.j > b.j ? -1 : 1;
    if (a.i != b.i) return a.i < b.i ? -1 : 1;
    return 0;
  }

 private:
  Weights weights_;
};

struct Term {
  Monomial m;
  Scalar c;
};

/// Sparse polynomial in K[x,y]. Terms are unique, nonzero and kept in
/// descending order of the (1,1)-weighted MonomialOrder.
class Polynomial {
 public:
  explicit Polynomial(FieldSpec field = {}) : field_(std::move(field)) {}
  Polynomial(const FieldSpec& field, std::vector<Term> terms);

  static Polynomial constant(const Scalar& c);
  static Polynomial constant(const Rational& c, const FieldSpec& field = {});
  static Polynomial monomial(const Monomial& m, const Scalar& c);
  static Polynomial x(const FieldSpec& field = {});
  static Polynomial y(const FieldSpec& field = {});

  const FieldSpec& field() const noexcept { return field_; }
  /// Same polynomial with coefficients promoted into `target`.
  Polynomial in(const FieldSpec& target) const;
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Scalar coefficient(const Monomial& m) const;

  /// Empty for the zero polynomial (degree -infinity).
  std::optional<long> weighted_degree(const Weights& w) const;
  long total_degree() const;  // -1 for zero
  long degree_x() const;      // -1 for zero
  long degree_y() const;      // -1 for zero
  /// Sum of the terms of maximal weighted degree. Throws ZeroInput.
  Polynomial leading_form(const Weights& w) const;
  bool is_weighted_homogeneous(const Weights& w) const;

  Polynomial diff_x() const;
  Polynomial diff_y() const;
  /// p(X, Y).
  Polynomial compose(const Polynomial& X, const Polynomial& Y) const;
  Scalar evaluate(const Scalar& x, const Scalar& y) const;
  /// Float evaluation for plotting; extension fields need `embedding`.
  double evaluate_float(double x, double y, std::optional<double> embedding = {}) const;
  Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator-() const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial shifted(const Monomial& m, const Scalar& c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical text accepted back by parse_poly.
  std::string to_string() const;

 private:
  /// Promotes *this or returns a promoted copy of o so both share a field.
  const Polynomial& align(const Polynomial& o, Polynomial& tmp);

  FieldSpec field_;
  std::vector<Term> terms_;
};

/// Quotient and remainder of p by a single nonzero divisor.
/// Remainder is zero exactly when d divides p.
std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& d);
bool divides(const Polynomial& d, const Polynomial& p);

/// Parses the polynomial grammar over `field`; accepted symbols are x, y and
/// the field generator.
Polynomial parse_poly(std::string_view text, const FieldSpec& field = {});
/// Parses a monic univariate minimal polynomial written in `generator`.
FieldSpec parse_field(std::string_view minpoly_text, const std::string& generator = "z");

/// P dx + Q dy.
struct OneForm {
  Polynomial P;
  Polynomial Q;

  OneForm() = default;
  OneForm(Polynomial p, Polynomial q);

  const FieldSpec& field() const noexcept { return P.field(); }
  bool is_zero() const noexcept { return P.is_zero() && Q.is_zero(); }
  long total_degree() const;

  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(const Polynomial& c, const OneForm& w) { return {c * w.P, c * w.Q}; }
  friend OneForm operator*(const Scalar& c, const OneForm& w) { return {w.P * c, w.Q * c}; }
  friend bool operator==(const OneForm&, const OneForm&) = default;

  /// "[P, Q]" with canonical polynomial text.
  std::string to_string() const;
};

/// coeff dx^dy.
struct TwoForm {
  Polynomial coeff;
  friend bool operator==(const TwoForm&, const TwoForm&) = default;
};

/// u ^ v with coefficient u.P v.Q - u.Q v.P. Throws FieldMismatch.
TwoForm wedge(const OneForm& u, const OneForm& v);
/// (dp/dx) dx + (dp/dy) dy.
OneForm exterior_derivative(const Polynomial& p);
/// Pullback of w under the polynomial map (x, y) -> (X, Y).
OneForm pullback(const OneForm& w, const Polynomial& X, const Polynomial& Y);

}  // namespace invcurve
