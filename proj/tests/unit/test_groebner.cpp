#include <map>

#include "doctest.h"
#include "generators.hpp"
#include "invcurve/errors.hpp"
#include "invcurve/groebner.hpp"

using namespace invcurve;

namespace {

Polynomial P(const char* s) { return parse_poly(s); }
ModuleVector V(std::initializer_list<const char*> comps) {
  std::vector<Polynomial> v;
  for (auto c : comps) v.push_back(P(c));
  return ModuleVector(std::move(v));
}
std::vector<ModuleVector> ideal(std::initializer_list<const char*> gens) {
  std::vector<ModuleVector> out;
  for (auto g : gens) out.push_back(V({g}));
  return out;
}

// Kernel of a dense rational matrix by plain Gauss-Jordan; test-only oracle.
std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// All syzygies of ideal generators with cofactor total degree <= D, by
// solving the coefficient equations directly.
std::vector<ModuleVector> brute_force_syzygies(const std::vector<Polynomial>& g, int D) {
  std::vector<Monomial> monos;
  for (int d = 0; d <= D; ++d)
    for (int i = d; i >= 0; --i)
      monos.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)});
  std::size_t cols = monos.size() * g.size();
  std::map<Monomial, std::size_t> rows;
  std::vector<std::vector<Rational>> a;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = 0; k < monos.size(); ++k) {
      for (const auto& t : g[i].terms()) {
        Monomial m = t.m * monos[k];
        auto [it, ins] = rows.try_emplace(m, a.size());
        if (ins) a.emplace_back(cols, Rational(0));
        a[it->second][i * monos.size() + k] += t.c.as_rational();
      }
    }
  }
  std::vector<ModuleVector> out;
  for (const auto& v : rational_kernel(a, cols)) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < monos.size(); ++k)
        terms.push_back({monos[k], Scalar(v[i * monos.size() + k])});
      comps.emplace_back(FieldSpec{}, std::move(terms));
    }
    out.emplace_back(std::move(comps));
  }
  return out;
}

}  // namespace

TEST_CASE("monomial ideals") {
  auto gb = buchberger(ideal({"2*x", "2*y"}));
  REQUIRE(gb.size() == 2);
  CHECK(gb.generators()[0] == V({"y"}));
  CHECK(gb.generators()[1] == V({"x"}));

  auto gb2 = buchberger(ideal({"3*x^2", "3*y^2"}));
  REQUIRE(gb2.size() == 2);
  CHECK(gb2.generators()[0] == V({"y^2"}));
  CHECK(gb2.generators()[1] == V({"x^2"}));
  CHECK(satisfies_buchberger_criterion(gb2));
}

TEST_CASE("rank mismatch and empty input") {
  CHECK_THROWS_AS(buchberger({V({"x"}), V({"x", "y"})}), RankMismatch);
  CHECK_THROWS_AS(buchberger({}), RankMismatch);
  auto gb = buchberger(ideal({"x"}));
  CHECK_THROWS_AS(normal_form(V({"x", "y"}), gb), RankMismatch);
}

TEST_CASE("normal form examples") {
  CHECK(normal_form(P("x^2"), buchberger(ideal({"x", "y"}))).is_zero());
  CHECK(normal_form(P("x*y-1"), buchberger(ideal({"y", "x"}))) == P("-1"));
  auto jac = buchberger(ideal({"3*x^2", "3*y^2"}));
  CHECK(normal_form(P("x^3+y^3"), jac).is_zero());
}

TEST_CASE("cofactor tracking recombines") {
  std::vector<ModuleVector> gens = ideal({"5*x^4-2*x*y^2", "5*y^4-2*x^2*y"});
  auto gb = buchberger(gens, {}, true);
  REQUIRE(gb.has_transform());
  for (std::size_t k = 0; k < gb.size(); ++k) {
    Polynomial sum;
    for (std::size_t i = 0; i < gens.size(); ++i)
      sum += gb.transform()[k][i] * gens[i].components[0];
    CHECK(sum == gb.generators()[k].components[0]);
  }
  CHECK(satisfies_buchberger_criterion(gb));
}

TEST_CASE("membership examples") {
  Membership euler = membership(V({"x^3+y^3"}), ideal({"3*x^2", "3*y^2"}));
  CHECK(euler.member);
  CHECK(euler.certificate[0] * P("3*x^2") + euler.certificate[1] * P("3*y^2") == P("x^3+y^3"));
  CHECK_FALSE(membership(V({"x*y-1"}), ideal({"y", "x"})).member);
}

TEST_CASE("syzygy examples") {
  auto s = syzygies(ideal({"x", "y"}));
  REQUIRE(s.size() == 1);
  CHECK((s[0] == V({"y", "-x"}) || s[0] == V({"-y", "x"})));

  auto t = syzygies(ideal({"x", "x"}));
  REQUIRE(t.size() == 1);
  CHECK((t[0] == V({"1", "-1"}) || t[0] == V({"-1", "1"})));

  Polynomial f = P("x*y-1");
  auto u = syzygies(ideal({"-x", "y", "x*y-1"}));
  CHECK_FALSE(u.empty());
  for (const auto& z : u)
    CHECK((-P("x") * z.components[0] + P("y") * z.components[1] + f * z.components[2]).is_zero());
}

TEST_CASE("module syzygies and membership in rank 2") {
  std::vector<ModuleVector> gens{V({"y^2", "1"}), V({"x*y-1", "0"}), V({"y", "x"})};
  auto syz = syzygies(gens);
  CHECK_FALSE(syz.empty());
  auto m = membership(V({"0", "x*y-1"}), gens);
  CHECK(m.member);
}

TEST_CASE("engine properties on random small inputs") {
  testing::Gen gen(99);
  FieldSpec q;
  int checked = 0;
  for (int n = 0; n < 120; ++n) {
    const std::size_t rank = 1 + n % 2;
    const std::size_t count = 2 + n % 2;
    std::vector<ModuleVector> gens;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Polynomial> comps;
      for (std::size_t r = 0; r < rank; ++r) comps.push_back(gen.poly(q, 2, 3));
      gens.emplace_back(std::move(comps));
    }
    if (std::all_of(gens.begin(), gens.end(), [](auto& g) { return g.is_zero(); })) continue;
    auto gb = buchberger(gens, {}, true);
    CHECK(satisfies_buchberger_criterion(gb));
    // reduced: no leading term divides another
    auto leads = gb.leading_terms();
    for (std::size_t a = 0; a < leads.size(); ++a)
      for (std::size_t b = 0; b < leads.size(); ++b)
        if (a != b) CHECK_FALSE((leads[a].pos == leads[b].pos && leads[a].m.divides(leads[b].m)));
    // NF idempotence and certificate soundness
    std::vector<Polynomial> comps;
    for (std::size_t r = 0; r < rank; ++r) comps.push_back(gen.poly(q, 3, 4));
    ModuleVector v(comps);
    auto nf = normal_form(v, gb, true);
    CHECK(normal_form(nf.remainder, gb).remainder == nf.remainder);
    ModuleVector recombined = nf.remainder;
    for (std::size_t k = 0; k < gb.size(); ++k) recombined += nf.cofactors[k] * gb.generators()[k];
    CHECK(recombined == v);
    // a combination of generators is always a member with exact certificate
    ModuleVector combo = ModuleVector::zero(rank);
    for (const auto& g : gens) combo += gen.poly(q, 1, 2) * g;
    auto m = membership(combo, gb);
    CHECK(m.member);
    // syzygy soundness
    for (const auto& z : syzygies(gens)) {
      ModuleVector sum = ModuleVector::zero(rank);
      for (std::size_t i = 0; i < gens.size(); ++i) sum += z.components[i] * gens[i];
      CHECK(sum.is_zero());
    }
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("syzygy completeness against a degree-bounded oracle") {
  testing::Gen gen(5);
  FieldSpec q;
  for (int n = 0; n < 12; ++n) {
    std::vector<Polynomial> g{gen.nonzero_poly(q, 2, 3), gen.nonzero_poly(q, 2, 3),
                              gen.nonzero_poly(q, 2, 3)};
    std::vector<ModuleVector> gens;
    for (auto& p : g) gens.push_back(ModuleVector({p}));
    auto syz = syzygies(gens);
    for (const auto& z : brute_force_syzygies(g, 2)) {
      CHECK(z.components[0] * g[0] + z.components[1] * g[1] + z.components[2] * g[2] ==
            Polynomial());
      if (!syz.empty()) CHECK(membership(z, syz).member);
      else CHECK(z.is_zero());
    }
  }
}
