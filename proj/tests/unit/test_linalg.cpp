#include <map>

#include "doctest.h"
#include "generators.hpp"
#include "invcurve/errors.hpp"
#include "invcurve/linalg.hpp"

using namespace invcurve;
using invcurve::testing::Gen;

namespace {

UniPoly U(std::vector<Rational> asc) { return UniPoly::from_rationals(asc); }

MatrixK from_rows(const std::vector<std::vector<long>>& rows) {
  MatrixK m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Scalar(rows[r][c]);
  return m;
}

// Oracle: rank by plain Gaussian elimination with division, no row tricks.
std::size_t naive_rank(const MatrixK& m) {
  std::vector<std::vector<Scalar>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r].push_back(m(r, c));
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = rk;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t r = rk + 1; r < a.size(); ++r) {
      Scalar f = a[r][c] / a[rk][c];
      for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] -= f * a[rk][k];
    }
    ++rk;
  }
  return rk;
}

// Random matrix of exactly rank k: [I;B] * [I C] up to a row/column shuffle.
MatrixK known_rank(Gen& g, std::size_t rows, std::size_t cols, std::size_t k, const FieldSpec& f) {
  MatrixK left(rows, k, f), right(k, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < k; ++c) left(r, c) = r < k ? Scalar(r == c ? 1 : 0, f) : g.scalar(f, 3);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < cols; ++c) right(r, c) = c < k ? Scalar(r == c ? 1 : 0, f) : g.scalar(f, 3);
  MatrixK m = left * right;
  std::vector<std::size_t> pr(rows), pc(cols);
  for (std::size_t i = 0; i < rows; ++i) pr[i] = i;
  for (std::size_t i = 0; i < cols; ++i) pc[i] = i;
  std::shuffle(pr.begin(), pr.end(), g.engine());
  std::shuffle(pc.begin(), pc.end(), g.engine());
  MatrixK out(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(pr[r], pc[c]);
  return out;
}

// Unit upper-triangular S and its inverse (finite Neumann series).
std::pair<MatrixK, MatrixK> unitriangular(Gen& g, std::size_t n, bool upper) {
  MatrixK nil(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (upper ? c > r : c < r) nil(r, c) = Scalar(g.integer(-2, 2));
  MatrixK s = MatrixK::identity(n) + nil;
  MatrixK inv = MatrixK::identity(n), term = MatrixK::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = Scalar(-1) * (term * nil);
    inv += term;
  }
  REQUIRE(s * inv == MatrixK::identity(n));
  return {s, inv};
}

// Block-diagonal Jordan form hidden by a random similarity.
MatrixK jordan_matrix(Gen& g, const std::vector<std::pair<Rational, std::size_t>>& blocks) {
  std::size_t n = 0;
  for (auto& b : blocks) n += b.second;
  MatrixK j(n, n);
  std::size_t at = 0;
  for (auto& [lambda, size] : blocks) {
    for (std::size_t k = 0; k < size; ++k) {
      j(at + k, at + k) = Scalar(lambda);
      if (k + 1 < size) j(at + k, at + k + 1) = Scalar(1);
    }
    at += size;
  }
  auto [u, ui] = unitriangular(g, n, true);
  auto [l, li] = unitriangular(g, n, false);
  return (u * l) * j * (li * ui);
}

}  // namespace

TEST_CASE("rank and kernel examples") {
  CHECK(rank(MatrixK::identity(3)) == 3);
  CHECK(rank(MatrixK(4, 4)) == 0);
  CHECK(kernel_basis(MatrixK(2, 2)).size() == 2);
  CHECK(kernel_basis(MatrixK::identity(5)).empty());
  MatrixK m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  for (const auto& s : m.apply(ker[0])) CHECK(s.is_zero());
}

TEST_CASE("rank-nullity property") {
  Gen g(404);
  FieldSpec qi = parse_field("z^2+1");
  for (int trial = 0; trial < 120; ++trial) {
    const FieldSpec& f = trial % 3 == 0 ? qi : FieldSpec{};
    std::size_t rows = g.integer(1, 6), cols = g.integer(1, 6);
    std::size_t k = g.integer(0, std::min(rows, cols));
    MatrixK m = known_rank(g, rows, cols, k, f);
    std::size_t rk = rank(m);
    CHECK(rk == k);
    CHECK(rk == naive_rank(m));
    auto ker = kernel_basis(m);
    CHECK(rk + ker.size() == cols);
    for (const auto& v : ker)
      for (const auto& s : m.apply(v)) CHECK(s.is_zero());
    MatrixK kmat(cols, ker.size(), f);
    for (std::size_t c = 0; c < ker.size(); ++c)
      for (std::size_t r = 0; r < cols; ++r) kmat(r, c) = ker[c][r];
    CHECK(rank(kmat) == ker.size());
  }
}

TEST_CASE("univariate arithmetic") {
  UniPoly t = UniPoly::variable();
  UniPoly p = t * t * (t + U({Rational(16, 3125)}));
  CHECK(p.to_string() == "t^3+16/3125*t^2");
  CHECK(U({1, 2, 1}).to_string() == "t^2+2*t+1");
  CHECK(U({-1, 0, 1}).to_string("s") == "s^2-1");
  CHECK(UniPoly().to_string() == "0");
  CHECK(UniPoly().degree() == -1);
  auto [q, r] = divmod(U({-1, 0, 1}), U({1, 1}));
  CHECK(q == U({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(U({-1, 0, 1}), U({2, 2})) == U({1, 1}));
  CHECK(U({1, 2, 1}).evaluate(Scalar(-1)).is_zero());
  FieldSpec qi = parse_field("z^2+1");
  Scalar z = Scalar::generator(qi);
  UniPoly tz({z, Scalar(1)}, qi);
  CHECK(tz.to_string() == "t+z");
  UniPoly prod = tz * UniPoly({-z, Scalar(1)}, qi);
  CHECK(prod == UniPoly::from_rationals({1, 0, 1}, qi));
}

TEST_CASE("squarefree decomposition examples") {
  auto sf = squarefree_decompose(U({0, 0, 1, 1}));
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].factor.to_string() == "t");
  CHECK(sf[0].multiplicity == 2);
  CHECK(sf[1].factor.to_string() == "t+1");
  CHECK(sf[1].multiplicity == 1);
  sf = squarefree_decompose(U({1, 2, 1}));
  REQUIRE(sf.size() == 1);
  CHECK(sf[0].factor.to_string() == "t+1");
  CHECK(sf[0].multiplicity == 2);
  sf = squarefree_decompose(U({0, 0, Rational(16, 3125), 1}));
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].factor.to_string() == "t");
  CHECK(sf[0].multiplicity == 2);
  CHECK(sf[1].factor.to_string() == "t+16/3125");
  CHECK(squarefree_decompose(U({7})).empty());
  CHECK_THROWS_AS(squarefree_decompose(UniPoly()), ZeroInput);
}

TEST_CASE("squarefree decomposition property") {
  Gen g(77);
  for (int trial = 0; trial < 100; ++trial) {
    // product of distinct linear factors raised to chosen multiplicities
    std::map<long, unsigned> roots;
    int n = g.integer(1, 4);
    for (int k = 0; k < n; ++k) roots[g.integer(-4, 4)] = g.integer(1, 4);
    Rational unit(g.integer(1, 5), g.integer(1, 3));
    UniPoly p = UniPoly::constant(Scalar(unit));
    std::map<unsigned, UniPoly> expected;
    for (auto [root, mult] : roots) {
      UniPoly lin = U({-root, 1});
      for (unsigned k = 0; k < mult; ++k) p = p * lin;
      auto it = expected.find(mult);
      if (it == expected.end())
        expected.emplace(mult, lin);
      else
        it->second = it->second * lin;
    }
    auto sf = squarefree_decompose(p);
    REQUIRE(sf.size() == expected.size());
    UniPoly rebuilt = UniPoly::constant(Scalar(unit));
    for (const auto& [factor, mult] : sf) {
      CHECK(factor == expected.at(mult));
      CHECK(gcd(factor, factor.derivative()).degree() == 0);
      for (unsigned k = 0; k < mult; ++k) rebuilt = rebuilt * factor;
    }
    CHECK(rebuilt == p);
    for (std::size_t a = 0; a < sf.size(); ++a)
      for (std::size_t b = a + 1; b < sf.size(); ++b) CHECK(gcd(sf[a].factor, sf[b].factor).degree() == 0);
  }
}

TEST_CASE("matrix polynomial evaluation") {
  MatrixK m = from_rows({{1, 2}, {3, 4}});
  CHECK(eval_matrix_poly(UniPoly::variable(), m) == m);
  CHECK(eval_matrix_poly(U({1, 0, 1}), m) == m * m + MatrixK::identity(2));
  CHECK_THROWS_AS(eval_matrix_poly(U({1}), MatrixK(2, 3)), NotSquare);
  std::vector<Scalar> v{Scalar(1), Scalar(-2)};
  CHECK(apply_matrix_poly(U({3, -1, 2}), m, v) == eval_matrix_poly(U({3, -1, 2}), m).apply(v));
}

TEST_CASE("minimal polynomial of hidden Jordan forms") {
  Gen g(2024);
  using Blocks = std::vector<std::pair<Rational, std::size_t>>;
  struct Case {
    Blocks blocks;
    std::vector<Rational> expected;  // ascending, monic
  };
  std::vector<Case> cases = {
      {{{0, 2}, {0, 1}, {-1, 1}}, {0, 0, 1, 1}},
      {{{0, 1}, {0, 1}, {0, 1}}, {0, 1}},
      {{{2, 3}}, {-8, 12, -6, 1}},
      {{{1, 1}, {-1, 1}}, {-1, 0, 1}},
  };
  for (const auto& c : cases) {
    MatrixK a = jordan_matrix(g, c.blocks);
    UniPoly p = minimal_polynomial(a);
    CHECK(p == U(c.expected));
    CHECK(eval_matrix_poly(p, a).is_zero());
    for (const auto& [factor, mult] : squarefree_decompose(p)) {
      // dropping one copy of any factor must no longer annihilate
      UniPoly smaller = divmod(p, factor).quotient;
      CHECK_FALSE(eval_matrix_poly(smaller, a).is_zero());
    }
  }
  CHECK(minimal_polynomial(MatrixK(4, 4)) == UniPoly::variable());
  CHECK(minimal_polynomial(from_rows({{-1}})) == U({1, 1}));
}
