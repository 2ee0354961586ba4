#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invcurve/poly.hpp"

namespace invcurve {

/// Element of the free module K[x,y]^r.
struct ModuleVector {
  std::vector<Polynomial> components;

  ModuleVector() = default;
  explicit ModuleVector(std::vector<Polynomial> comps) : components(std::move(comps)) {}
  static ModuleVector zero(std::size_t rank, const FieldSpec& field = {});
  static ModuleVector from_form(const OneForm& w) { return ModuleVector({w.P, w.Q}); }
  OneForm to_form() const;

  std::size_t rank() const noexcept { return components.size(); }
  bool is_zero() const noexcept;
  FieldSpec field() const;

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Polynomial& c, const ModuleVector& v);
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  std::string to_string() const;
};

/// Term-over-position order on K[x,y]^r, lower position index wins ties.
/// Positions below `eliminate` dominate every position at or above it, which
/// is the block order used to compute syzygies.
struct ModuleOrder {
  MonomialOrder base;
  std::size_t eliminate = 0;

  ModuleOrder() = default;
  explicit ModuleOrder(MonomialOrder b, std::size_t elim = 0) : base(b), eliminate(elim) {}

  int compare(const Monomial& a, std::uint32_t pa, const Monomial& b,
              std::uint32_t pb) const noexcept {
    if (eliminate > 0) {
      bool ia = pa < eliminate, ib = pb < eliminate;
      if (ia != ib) return ia ? 1 : -1;
    }
    int c = base.compare(a, b);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
};

struct LeadingTerm {
  Monomial m;
  std::uint32_t pos = 0;
  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

namespace detail {
struct GbData;
}

/// Reduced Gröbner basis of a submodule of K[x,y]^r; leading coefficients
/// are 1 and no leading term divides another.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const std::vector<ModuleVector>& generators() const;
  std::vector<LeadingTerm> leading_terms() const;
  const ModuleOrder& order() const;
  std::size_t rank() const;
  std::size_t size() const { return generators().size(); }
  const FieldSpec& field() const;

  bool has_transform() const;
  /// Row k expresses generator k in the input generators:
  /// generators()[k] = sum_i transform()[k][i] * input_i.
  const std::vector<std::vector<Polynomial>>& transform() const;
  std::size_t input_count() const;

  /// True when the basis contains a unit vector in every position
  /// (the module is everything).
  bool is_whole_module() const;

 private:
  friend GroebnerBasis buchberger(const std::vector<ModuleVector>&, const ModuleOrder&, bool);
  friend struct NormalFormAccess;
  std::shared_ptr<const detail::GbData> data_;
};

GroebnerBasis buchberger(const std::vector<ModuleVector>& gens, const ModuleOrder& order = {},
                         bool track_cofactors = false);

struct NormalForm {
  ModuleVector remainder;
  /// Coefficients against gb.generators(); filled when tracking.
  std::vector<Polynomial> cofactors;
};

/// Full reduction: no term of the remainder is divisible by a leading term.
NormalForm normal_form(const ModuleVector& v, const GroebnerBasis& gb, bool track_cofactors = false);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

struct Membership {
  bool member = false;
  /// When member: v = sum_i certificate[i] * gens_i exactly.
  std::vector<Polynomial> certificate;
};

Membership membership(const ModuleVector& v, const std::vector<ModuleVector>& gens,
                      const ModuleOrder& order = {});
/// Uses a basis computed with cofactor tracking; certificate is in the
/// basis' input generators.
Membership membership(const ModuleVector& v, const GroebnerBasis& tracked);

/// Generating set of {(a_1..a_s) : sum a_i gens_i = 0}.
std::vector<ModuleVector> syzygies(const std::vector<ModuleVector>& gens,
                                   const MonomialOrder& base = {});

/// Reduces every S-vector of the basis (no pair pruning) and reports
/// whether all of them vanish.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

}  // namespace invcurve
