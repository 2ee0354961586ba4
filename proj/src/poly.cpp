#include "invcurve/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "invcurve/errors.hpp"

namespace invcurve {

namespace {

const MonomialOrder kCanonical{};

bool canonical_greater(const Term& a, const Term& b) {
  return kCanonical.compare(a.m, b.m) > 0;
}

std::uint64_t key(const Monomial& m) {
  return (static_cast<std::uint64_t>(m.i) << 32) | m.j;
}

void check_exponent(std::uint64_t e) {
  if (e > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
    throw ExponentOverflow("monomial exponent overflow");
}

}  // namespace

Weights::Weights(long a1, long a2) : alpha1(a1), alpha2(a2) {
  if (a1 < 1 || a2 < 1) throw Error("weights must be positive integers");
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::uint64_t a = static_cast<std::uint64_t>(i) + o.i;
  std::uint64_t b = static_cast<std::uint64_t>(j) + o.j;
  check_exponent(a);
  check_exponent(b);
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

std::string Monomial::to_string() const {
  std::string s;
  if (i > 0) {
    s += "x";
    if (i > 1) s += "^" + std::to_string(i);
  }
  if (j > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (j > 1) s += "^" + std::to_string(j);
  }
  return s.empty() ? "1" : s;
}

Polynomial::Polynomial(const FieldSpec& field, std::vector<Term> terms) : field_(field) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (auto& t : terms) {
    if (!(t.c.field() == field_)) t.c = t.c.in(field_);
    auto [it, inserted] = index.try_emplace(key(t.m), terms_.size());
    if (inserted)
      terms_.push_back(std::move(t));
    else
      terms_[it->second].c += t.c;
  }
  std::erase_if(terms_, [](const Term& t) { return t.c.is_zero(); });
  std::sort(terms_.begin(), terms_.end(), canonical_greater);
}

Polynomial Polynomial::constant(const Scalar& c) { return monomial({0, 0}, c); }

Polynomial Polynomial::constant(const Rational& c, const FieldSpec& field) {
  return constant(Scalar(c, field));
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p(c.field());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::x(const FieldSpec& field) { return monomial({1, 0}, Scalar::one(field)); }
Polynomial Polynomial::y(const FieldSpec& field) { return monomial({0, 1}, Scalar::one(field)); }

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Monomial{});
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return Scalar::zero(field_);
}

std::optional<long> Polynomial::weighted_degree(const Weights& w) const {
  if (terms_.empty()) return std::nullopt;
  long d = std::numeric_limits<long>::min();
  for (const auto& t : terms_) d = std::max(d, t.m.weighted_degree(w));
  return d;
}

long Polynomial::total_degree() const { return terms_.empty() ? -1 : terms_.front().m.total_degree(); }

long Polynomial::degree_x() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.m.i));
  return d;
}

long Polynomial::degree_y() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.m.j));
  return d;
}

Polynomial Polynomial::leading_form(const Weights& w) const {
  if (is_zero()) throw ZeroInput("leading form of the zero polynomial");
  long d = *weighted_degree(w);
  Polynomial r(field_);
  for (const auto& t : terms_)
    if (t.m.weighted_degree(w) == d) r.terms_.push_back(t);
  return r;
}

bool Polynomial::is_weighted_homogeneous(const Weights& w) const {
  if (is_zero()) return true;
  long d = terms_.front().m.weighted_degree(w);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.m.weighted_degree(w) == d; });
}

Polynomial Polynomial::diff_x() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.m.i > 0) out.push_back({{t.m.i - 1, t.m.j}, t.c * Scalar(static_cast<long>(t.m.i), field_)});
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::diff_y() const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.m.j > 0) out.push_back({{t.m.i, t.m.j - 1}, t.c * Scalar(static_cast<long>(t.m.j), field_)});
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(Scalar::one(field_));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& X0, const Polynomial& Y0) const {
  FieldSpec f = common_field(common_field(field_, X0.field()), Y0.field());
  if (!(f == field_)) return in(f).compose(X0, Y0);
  Polynomial X = X0.in(f), Y = Y0.in(f);
  std::vector<Polynomial> xpow{constant(Scalar::one(field_))}, ypow{constant(Scalar::one(field_))};
  Polynomial result(field_);
  for (const auto& t : terms_) {
    while (xpow.size() <= t.m.i) xpow.push_back(xpow.back() * X);
    while (ypow.size() <= t.m.j) ypow.push_back(ypow.back() * Y);
    result += xpow[t.m.i] * ypow[t.m.j] * t.c;
  }
  return result;
}

Scalar Polynomial::evaluate(const Scalar& x, const Scalar& y) const {
  Scalar acc = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar v = t.c;
    for (std::uint32_t k = 0; k < t.m.i; ++k) v *= x;
    for (std::uint32_t k = 0; k < t.m.j; ++k) v *= y;
    acc += v;
  }
  return acc;
}

double Polynomial::evaluate_float(double x, double y, std::optional<double> embedding) const {
  if (!field_.is_rationals() && !embedding)
    throw MissingEmbedding("evaluation over " + field_.describe() +
                           " needs a numeric value for " + field_.generator());
  double acc = 0.0;
  for (const auto& t : terms_)
    acc += t.c.to_double(embedding.value_or(0.0)) * std::pow(x, t.m.i) * std::pow(y, t.m.j);
  return acc;
}

Polynomial Polynomial::in(const FieldSpec& target) const {
  if (field_ == target) return *this;
  Polynomial r(target);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, t.c.in(target)});
  return r;
}

const Polynomial& Polynomial::align(const Polynomial& o, Polynomial& tmp) {
  if (field_ == o.field_) return o;
  FieldSpec f = common_field(field_, o.field_);
  if (!(field_ == f)) *this = in(f);
  if (o.field_ == f) return o;
  tmp = o.in(f);
  return tmp;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  Polynomial tmp;
  const Polynomial& o = align(other, tmp);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    int c = kCanonical.compare(a->m, b->m);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Scalar s = a->c + b->c;
      if (!s.is_zero()) out.push_back({a->m, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (!(c.field() == field_) && field_.is_rationals() && !c.field().is_rationals())
    return in(c.field()) * c;
  Scalar k = c.in(field_);
  Polynomial r(field_);
  if (k.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * k});
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const { return *this * Scalar(c, field_); }

Polynomial Polynomial::shifted(const Monomial& m, const Scalar& c) const {
  if (!(c.field() == field_) && field_.is_rationals() && !c.field().is_rationals())
    return in(c.field()).shifted(m, c);
  Scalar k = c.in(field_);
  Polynomial r(field_);
  if (k.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the order
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * k});
  return r;
}

Polynomial operator*(const Polynomial& a0, const Polynomial& b0) {
  if (!(a0.field_ == b0.field_)) {
    FieldSpec f = common_field(a0.field_, b0.field_);
    return a0.in(f) * b0.in(f);
  }
  const Polynomial& a = a0;
  const Polynomial& b = b0;
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<Term> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m = s.m * t.m;
      auto [it, inserted] = index.try_emplace(key(m), acc.size());
      if (inserted)
        acc.push_back({m, s.c * t.c});
      else
        acc[it->second].c += s.c * t.c;
    }
  }
  std::erase_if(acc, [](const Term& t) { return t.c.is_zero(); });
  std::sort(acc.begin(), acc.end(), canonical_greater);
  Polynomial r(a.field_);
  r.terms_ = std::move(acc);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].m != b.terms_[k].m || !(a.terms_[k].c == b.terms_[k].c)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool unit_monomial = t.m == Monomial{};
    if (t.c.is_compound()) {
      if (!first) out << "+";
      out << "(" << t.c.to_string() << ")";
      if (!unit_monomial) out << "*" << t.m.to_string();
    } else {
      const bool negative = t.c.print_sign() < 0;
      Scalar mag = negative ? -t.c : t.c;
      if (negative)
        out << "-";
      else if (!first)
        out << "+";
      if (unit_monomial)
        out << mag.to_string();
      else if (mag.is_one())
        out << t.m.to_string();
      else
        out << mag.to_string() << "*" << t.m.to_string();
    }
    first = false;
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Term& lead = d.terms().front();
  Scalar inv = lead.c.inverse();
  Polynomial q(p.field()), r(p.field()), h = p;
  while (!h.is_zero()) {
    const Term t = h.terms().front();
    if (lead.m.divides(t.m)) {
      Monomial m = t.m / lead.m;
      Scalar c = t.c * inv;
      q += Polynomial::monomial(m, c);
      h -= d.shifted(m, c);
    } else {
      Polynomial lt = Polynomial::monomial(t.m, t.c);
      r += lt;
      h -= lt;
    }
  }
  return {q, r};
}

bool divides(const Polynomial& d, const Polynomial& p) { return divide(p, d).second.is_zero(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldSpec& field, std::string xname, std::string yname,
         std::string gname)
      : text_(text), field_(field), x_(std::move(xname)), y_(std::move(yname)),
        g_(std::move(gname)) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_ws();
      mpz_class e = natural();
      if (e > 1000000) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class natural() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial base() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = natural();
      mpz_class den = 1;
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        den = natural();
        if (den == 0) throw DivisionByZero("zero denominator at position " + std::to_string(pos_));
      }
      return Polynomial::constant(Rational(num, den), field_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == x_) return Polynomial::x(field_);
      if (!y_.empty() && name == y_) return Polynomial::y(field_);
      if (!g_.empty() && name == g_) return Polynomial::constant(Scalar::generator(field_));
      throw UnknownSymbol("unknown symbol '" + name + "' at position " + std::to_string(start));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const FieldSpec& field_;
  std::string x_, y_, g_;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const FieldSpec& field) {
  return Parser(text, field, "x", "y", field.generator()).parse();
}

FieldSpec parse_field(std::string_view minpoly_text, const std::string& generator) {
  Polynomial m = Parser(minpoly_text, FieldSpec{}, generator, "", "").parse();
  std::vector<Rational> coeffs(m.is_zero() ? 0 : static_cast<std::size_t>(m.degree_x() + 1),
                               Rational(0));
  for (const auto& t : m.terms()) coeffs[t.m.i] = t.c.as_rational();
  return FieldSpec::extension(std::move(coeffs), generator);
}

// ---------------------------------------------------------------------------
// Forms

OneForm::OneForm(Polynomial p, Polynomial q) : P(std::move(p)), Q(std::move(q)) {
  FieldSpec f = common_field(P.field(), Q.field());
  P = P.in(f);
  Q = Q.in(f);
}

long OneForm::total_degree() const { return std::max(P.total_degree(), Q.total_degree()); }

OneForm& OneForm::operator+=(const OneForm& o) {
  P += o.P;
  Q += o.Q;
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  P -= o.P;
  Q -= o.Q;
  return *this;
}

std::string OneForm::to_string() const { return "[" + P.to_string() + ", " + Q.to_string() + "]"; }

TwoForm wedge(const OneForm& u, const OneForm& v) {
  common_field(u.field(), v.field());
  return {u.P * v.Q - u.Q * v.P};
}

OneForm exterior_derivative(const Polynomial& p) { return {p.diff_x(), p.diff_y()}; }

OneForm pullback(const OneForm& w, const Polynomial& X, const Polynomial& Y) {
  Polynomial a = w.P.compose(X, Y), b = w.Q.compose(X, Y);
  return {a * X.diff_x() + b * Y.diff_x(), a * X.diff_y() + b * Y.diff_y()};
}

}  // namespace invcurve
