#pragma once

#include <span>
#include <string>
#include <vector>

#include "invcurve/scalar.hpp"

namespace invcurve {

/// Dense row-major matrix over K.
class MatrixK {
 public:
  MatrixK() = default;
  MatrixK(std::size_t rows, std::size_t cols, const FieldSpec& field = {});
  static MatrixK identity(std::size_t n, const FieldSpec& field = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;
  std::vector<Scalar> column(std::size_t c) const;

  MatrixK& operator+=(const MatrixK& o);
  MatrixK& operator-=(const MatrixK& o);
  friend MatrixK operator+(MatrixK a, const MatrixK& b) { return a += b; }
  friend MatrixK operator-(MatrixK a, const MatrixK& b) { return a -= b; }
  friend MatrixK operator*(const MatrixK& a, const MatrixK& b);
  friend MatrixK operator*(const Scalar& c, MatrixK m);
  friend bool operator==(const MatrixK&, const MatrixK&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

/// Univariate polynomial over K, ascending coefficients, no trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(FieldSpec field = {}) : field_(std::move(field)) {}
  UniPoly(std::vector<Scalar> ascending, const FieldSpec& field);
  static UniPoly from_rationals(const std::vector<Rational>& ascending, const FieldSpec& field = {});
  static UniPoly variable(const FieldSpec& field = {});
  static UniPoly constant(const Scalar& c);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const Scalar& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Scalar coefficient(std::size_t k) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  Scalar evaluate(const Scalar& t) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Canonical text in the variable `var`, e.g. "t^3+16/3125*t^2".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  FieldSpec field_;
  std::vector<Scalar> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};
DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Rank over K by fraction-free (Bareiss) elimination.
std::size_t rank(const MatrixK& m);
/// Exact basis of the right null space; size cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const MatrixK& m);
/// h(M) by Horner's rule. Throws NotSquare.
MatrixK eval_matrix_poly(const UniPoly& h, const MatrixK& m);
/// h(M) v without forming h(M).
std::vector<Scalar> apply_matrix_poly(const UniPoly& h, const MatrixK& m, std::span<const Scalar> v);
/// Monic minimal polynomial from the first linear dependence among I, M, M^2, ...
UniPoly minimal_polynomial(const MatrixK& m);

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree
  unsigned multiplicity;
};
/// Yun's algorithm, highest multiplicity first; the product of factor^multiplicity equals p up to a unit.
std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& p);

}  // namespace invcurve
