#include "invcurve/scalar.hpp"

#include <sstream>

#include "invcurve/errors.hpp"

namespace invcurve {

namespace {

// Dense univariate polynomials over QQ, ascending, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub_scaled(QPoly a, const QPoly& b, const Rational& c, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q;
  trim(a);
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    a = sub_scaled(std::move(a), b, c, shift);
  }
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace

FieldSpec FieldSpec::extension(std::vector<Rational> minpoly, std::string generator) {
  trim(minpoly);
  if (minpoly.size() < 3) throw InvalidField("minimal polynomial must have degree >= 2");
  if (minpoly.back() != 1) throw InvalidField("minimal polynomial must be monic");
  if (generator.empty()) throw InvalidField("empty generator symbol");
  if (generator == "x" || generator == "y")
    throw InvalidField("generator symbol clashes with a polynomial variable");
  auto g = gcd(minpoly, derivative(minpoly));
  if (g.size() > 1) throw InvalidField("minimal polynomial is not squarefree");
  FieldSpec f;
  f.data_ = std::make_shared<const Data>(Data{std::move(minpoly), std::move(generator)});
  return f;
}

std::size_t FieldSpec::degree() const noexcept {
  return data_ ? data_->minpoly.size() - 1 : 1;
}

const std::vector<Rational>& FieldSpec::minpoly() const noexcept {
  static const std::vector<Rational> empty;
  return data_ ? data_->minpoly : empty;
}

const std::string& FieldSpec::generator() const noexcept {
  static const std::string empty;
  return data_ ? data_->generator : empty;
}

std::string FieldSpec::describe() const {
  if (!data_) return "QQ";
  return "QQ[" + data_->generator + "]/(" + qpoly_to_string(data_->minpoly, data_->generator) +
         ")";
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->minpoly == b.data_->minpoly && a.data_->generator == b.data_->generator;
}

Scalar::Scalar(const Rational& q, const FieldSpec& field) : field_(field), coeffs_(field.degree()) {
  coeffs_[0] = q;
  if (coeffs_[0].get_den() != 1) coeffs_[0].canonicalize();
}

Scalar Scalar::generator(const FieldSpec& field) {
  if (field.is_rationals()) throw InvalidField("QQ has no generator");
  Scalar s = zero(field);
  s.coeffs_[1] = 1;
  return s;
}

Scalar Scalar::from_coeffs(const FieldSpec& field, std::vector<Rational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  trim(coeffs);
  if (!field.is_rationals() && coeffs.size() >= field.minpoly().size())
    coeffs = divmod(std::move(coeffs), field.minpoly()).second;
  if (field.is_rationals() && coeffs.size() > 1)
    throw InvalidField("polynomial coefficient list over QQ");
  Scalar s = zero(field);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.coeffs_[i] = coeffs[i];
  return s;
}

bool Scalar::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const noexcept {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Rational& Scalar::as_rational() const {
  if (!is_rational()) throw InvalidField("element " + to_string() + " is not rational");
  return coeffs_[0];
}

Scalar Scalar::in(const FieldSpec& target) const {
  if (field_ == target) return *this;
  if (!field_.is_rationals()) throw FieldMismatch("cannot move " + field_.describe() +
                                                  " element into " + target.describe());
  return Scalar(coeffs_[0], target);
}

FieldSpec common_field(const FieldSpec& a, const FieldSpec& b) {
  if (a == b || b.is_rationals()) return a;
  if (a.is_rationals()) return b;
  throw FieldMismatch("fields differ: " + a.describe() + " vs " + b.describe());
}

const Scalar& Scalar::align(const Scalar& o, Scalar& tmp) {
  if (field_ == o.field_) return o;
  FieldSpec f = common_field(field_, o.field_);
  if (!(field_ == f)) *this = in(f);
  if (o.field_ == f) return o;
  tmp = o.in(f);
  return tmp;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  Scalar tmp;
  const Scalar& o = align(other, tmp);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  Scalar tmp;
  const Scalar& o = align(other, tmp);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  Scalar tmp;
  const Scalar& o = align(other, tmp);
  if (field_.is_rationals()) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  const auto& m = field_.minpoly();
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  // m is monic of degree n
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    if (prod[k] == 0) continue;
    Rational c = prod[k];
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] -= c * m[i];
    prod[k] = 0;
  }
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(prod[i]);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_.is_rationals()) return Scalar(Rational(1) / coeffs_[0]);
  // Extended Euclid: track s with s*a = r (mod m).
  QPoly r0 = field_.minpoly(), r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0;
    auto qs = mul(q, s1);
    if (s.size() < qs.size()) s.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty())
    throw DivisionByZero("element " + to_string() +
                         " is a zero divisor; the minimal polynomial is reducible");
  Rational c = 1 / r1[0];
  for (auto& v : s1) v *= c;
  return from_coeffs(field_, std::move(s1));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (!a.is_rational() || !b.is_rational()) return false;
  return a.coeffs_[0] == b.coeffs_[0];
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return coeffs_[0].get_str();
  return qpoly_to_string(QPoly(coeffs_.begin(), coeffs_.end()), field_.generator());
}

bool Scalar::is_compound() const noexcept {
  int nonzero = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) ++nonzero;
  return nonzero > 1;
}

int Scalar::print_sign() const noexcept {
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    if (coeffs_[k] != 0) return sgn(coeffs_[k]);
  return 0;
}

double Scalar::to_double(double embedding) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * embedding + coeffs_[k].get_d();
  return acc;
}

}  // namespace invcurve
