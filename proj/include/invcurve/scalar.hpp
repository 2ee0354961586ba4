#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace invcurve {

using Rational = mpq_class;

/// The base field: either QQ or a simple extension QQ[z]/(m(z)).
///
/// The minimal polynomial is stored with ascending coefficients and must be
/// monic, of degree at least 2 and squarefree. Irreducibility is not checked;
/// a reducible m(z) surfaces later as DivisionByZero on a nonzero element.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec extension(std::vector<Rational> minpoly,
                             std::string generator = "z");

  bool is_rationals() const noexcept { return !data_; }
  std::size_t degree() const noexcept;
  /// Ascending coefficients of m(z); empty for QQ.
  const std::vector<Rational>& minpoly() const noexcept;
  /// Generator symbol; empty for QQ.
  const std::string& generator() const noexcept;
  /// "QQ" or "QQ[z]/(z^2+1)".
  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Data {
    std::vector<Rational> minpoly;
    std::string generator;
  };
  std::shared_ptr<const Data> data_;
};

/// The smaller field containing both; QQ embeds into any extension.
/// Throws FieldMismatch for two distinct extensions.
FieldSpec common_field(const FieldSpec& a, const FieldSpec& b);

/// Exact element of a FieldSpec. Extension elements are kept reduced modulo
/// the minimal polynomial; every rational is canonical (GMP keeps lowest
/// terms with positive denominator).
class Scalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  Scalar() : coeffs_(1) {}
  Scalar(const Rational& q, const FieldSpec& field = {});
  Scalar(long v, const FieldSpec& field = {}) : Scalar(Rational(v), field) {}

  static Scalar zero(const FieldSpec& field) { return Scalar(0L, field); }
  static Scalar one(const FieldSpec& field) { return Scalar(1L, field); }
  /// The class of z in QQ[z]/(m). Throws InvalidField over QQ.
  static Scalar generator(const FieldSpec& field);
  /// Reduces an arbitrary-length ascending coefficient list modulo m(z).
  static Scalar from_coeffs(const FieldSpec& field, std::vector<Rational> coeffs);

  const FieldSpec& field() const noexcept { return field_; }
  std::span<const Rational> coeffs() const noexcept { return {coeffs_.data(), coeffs_.size()}; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in the prime field QQ.
  bool is_rational() const noexcept;
  /// Value of a rational element. Throws InvalidField otherwise.
  const Rational& as_rational() const;
  /// Same element viewed in `target`; only QQ -> extension promotion is allowed.
  Scalar in(const FieldSpec& target) const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "5/6", "3/2*z+1", "-z".
  std::string to_string() const;
  /// True when printing as a product factor needs parentheses.
  bool is_compound() const noexcept;
  /// -1, 0, +1 for rational elements; for others the sign of the leading
  /// nonzero coefficient (used only for printing).
  int print_sign() const noexcept;
  /// Double approximation with the generator replaced by `embedding`.
  double to_double(double embedding) const;

 private:
  /// Promotes *this or returns a promoted copy of o so both share a field.
  const Scalar& align(const Scalar& o, Scalar& tmp);

  FieldSpec field_;
  Coeffs coeffs_;
};

}  // namespace invcurve
