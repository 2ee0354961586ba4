#include "invcurve/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "invcurve/errors.hpp"

namespace invcurve {

// ---------------------------------------------------------------------------
// MatrixK

MatrixK::MatrixK(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

MatrixK MatrixK::identity(std::size_t n, const FieldSpec& field) {
  MatrixK m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

bool MatrixK::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Scalar> MatrixK::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error("matrix-vector size mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

std::vector<Scalar> MatrixK::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

MatrixK& MatrixK::operator+=(const MatrixK& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

MatrixK& MatrixK::operator-=(const MatrixK& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

MatrixK operator*(const MatrixK& a, const MatrixK& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product size mismatch");
  MatrixK out(a.rows_, b.cols_, common_field(a.field_, b.field_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

MatrixK operator*(const Scalar& c, MatrixK m) {
  for (auto& s : m.data_) s *= c;
  return m;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Scalar> ascending, const FieldSpec& field)
    : field_(field), c_(std::move(ascending)) {
  for (auto& s : c_) s = s.in(field_);
  trim();
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& ascending, const FieldSpec& field) {
  std::vector<Scalar> c;
  for (const auto& q : ascending) c.emplace_back(q, field);
  return UniPoly(std::move(c), field);
}

UniPoly UniPoly::variable(const FieldSpec& field) {
  return UniPoly({Scalar::zero(field), Scalar::one(field)}, field);
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly({c}, c.field()); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coefficient(std::size_t k) const {
  return k < c_.size() ? c_[k] : Scalar::zero(field_);
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  Scalar inv = c_.back().inverse();
  UniPoly r = *this;
  for (auto& s : r.c_) s *= inv;
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k), field_));
  return UniPoly(std::move(d), field_);
}

Scalar UniPoly::evaluate(const Scalar& t) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  FieldSpec f = common_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UniPoly(f);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r), f);
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    if (c.is_compound()) {
      if (!first) out << "+";
      out << "(" << c.to_string() << ")";
      if (k > 0) out << "*";
    } else {
      bool neg = c.print_sign() < 0;
      Scalar mag = neg ? -c : c;
      if (neg)
        out << "-";
      else if (!first)
        out << "+";
      if (k == 0)
        out << mag.to_string();
      else if (!mag.is_one())
        out << mag.to_string() << "*";
    }
    if (k > 0) {
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero("univariate division by zero");
  FieldSpec f = common_field(a.field(), b.field());
  std::vector<Scalar> rem = a.coefficients();
  std::vector<Scalar> q;
  Scalar inv = b.leading().inverse();
  const auto& bc = b.coefficients();
  if (rem.size() >= bc.size()) q.assign(rem.size() - bc.size() + 1, Scalar::zero(f));
  while (rem.size() >= bc.size() && !rem.empty()) {
    std::size_t shift = rem.size() - bc.size();
    Scalar c = rem.back() * inv;
    q[shift] = c;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[i + shift] -= c * bc[i];
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  return {UniPoly(std::move(q), f), UniPoly(std::move(rem), f)};
}

UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
  UniPoly a = a0, b = b0;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// Elimination

std::size_t rank(const MatrixK& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Scalar>> a(R);
  for (std::size_t r = 0; r < R; ++r) a[r] = [&] {
    std::vector<Scalar> row;
    row.reserve(C);
    for (std::size_t c = 0; c < C; ++c) row.push_back(m(r, c));
    return row;
  }();
  Scalar prev = Scalar::one(m.field());
  std::size_t rk = 0;
  for (std::size_t c = 0; c < C && rk < R; ++c) {
    std::size_t p = rk;
    while (p < R && a[p][c].is_zero()) ++p;
    if (p == R) continue;
    std::swap(a[p], a[rk]);
    const Scalar piv = a[rk][c];
    for (std::size_t r = rk + 1; r < R; ++r) {
      const Scalar lead = a[r][c];
      for (std::size_t k = c + 1; k < C; ++k) {
        Scalar v = piv * a[r][k];
        if (!lead.is_zero()) v -= lead * a[rk][k];
        a[r][k] = v / prev;
      }
      a[r][c] = Scalar::zero(m.field());
    }
    prev = piv;
    ++rk;
  }
  return rk;
}

std::vector<std::vector<Scalar>> kernel_basis(const MatrixK& m) {
  const std::size_t R = m.rows(), C = m.cols();
  const FieldSpec& f = m.field();
  std::vector<std::vector<Scalar>> a(R, std::vector<Scalar>(C));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c) a[r][c] = m(r, c);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t p = row;
    while (p < R && a[p][c].is_zero()) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    Scalar inv = a[row][c].inverse();
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      Scalar factor = a[r][c];
      for (std::size_t k = c; k < C; ++k)
        if (!a[row][k].is_zero()) a[r][k] -= factor * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<Scalar>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < C; ++free) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    std::vector<Scalar> v(C, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

MatrixK eval_matrix_poly(const UniPoly& h, const MatrixK& m) {
  if (m.rows() != m.cols()) throw NotSquare("matrix polynomial needs a square matrix");
  const std::size_t n = m.rows();
  FieldSpec f = common_field(h.field(), m.field());
  MatrixK acc(n, n, f);
  const auto& c = h.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

std::vector<Scalar> apply_matrix_poly(const UniPoly& h, const MatrixK& m, std::span<const Scalar> v) {
  if (m.rows() != m.cols()) throw NotSquare("matrix polynomial needs a square matrix");
  FieldSpec f = common_field(h.field(), m.field());
  std::vector<Scalar> acc(m.rows(), Scalar::zero(f));
  const auto& c = h.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = m.apply(acc);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c[k] * v[i];
  }
  return acc;
}

UniPoly minimal_polynomial(const MatrixK& m) {
  if (m.rows() != m.cols()) throw NotSquare("minimal polynomial needs a square matrix");
  const std::size_t n = m.rows();
  const FieldSpec& f = m.field();
  if (n == 0) return UniPoly::constant(Scalar::one(f));
  struct Row {
    std::vector<Scalar> v;  // reduced flattening of a combination of powers
    std::vector<Scalar> combo;  // coefficients over I, M, M^2, ...
    std::size_t pivot;
  };
  std::vector<Row> basis;
  MatrixK power = MatrixK::identity(n, f);
  for (std::size_t k = 0;; ++k) {
    std::vector<Scalar> v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(power(i, j));
    std::vector<Scalar> combo(k + 1, Scalar::zero(f));
    combo[k] = Scalar::one(f);
    for (const Row& r : basis) {
      if (v[r.pivot].is_zero()) continue;
      Scalar c = v[r.pivot];
      for (std::size_t t = r.pivot; t < v.size(); ++t)
        if (!r.v[t].is_zero()) v[t] -= c * r.v[t];
      for (std::size_t t = 0; t < r.combo.size(); ++t) combo[t] -= c * r.combo[t];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) return UniPoly(std::move(combo), f);
    Scalar inv = v[pivot].inverse();
    for (auto& s : v) s *= inv;
    for (auto& s : combo) s *= inv;
    basis.push_back({std::move(v), std::move(combo), pivot});
    power = power * m;
  }
}

std::vector<SquarefreeFactor> squarefree_decompose(const UniPoly& p) {
  if (p.is_zero()) throw ZeroInput("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = divmod(p, a).quotient;
  UniPoly c = divmod(dp, a).quotient;
  UniPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UniPoly ai = gcd(b, d);
    b = divmod(b, ai).quotient;
    c = divmod(d, ai).quotient;
    d = c - b.derivative();
    if (ai.degree() > 0) out.push_back({ai.monic(), i});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace invcurve
