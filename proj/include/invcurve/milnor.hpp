#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invcurve/groebner.hpp"
#include "invcurve/linalg.hpp"

namespace invcurve {

struct TameVerdict {
  bool tame = false;
  /// Top weighted-homogeneous part of f.
  Polynomial g;
  std::string reason;
};

/// Tame iff K[x,y]/jacob(g) is finite dimensional, g the leading form.
TameVerdict check_tame(const Polynomial& f, const Weights& w);

/// V_f = K[x,y]/jacob(f) with its standard-monomial basis.
struct MilnorAlgebra {
  Polynomial f;
  Weights weights;
  long d = 0;
  bool tame = false;
  /// Basis of jacob(f), tracked so that cofactors against (f_x, f_y) are available.
  GroebnerBasis gb;
  /// Standard monomials, ascending in the weighted order; basis[0] = 1 when mu > 0.
  std::vector<Monomial> basis;
  std::size_t mu = 0;
  /// dim V_g, when g is tame.
  std::optional<std::size_t> mu_g;
  /// 2d - 2*alpha1 - 2*alpha2.
  long top_degree = 0;
  /// Exactly one g-basis monomial of weighted degree top_degree and none above.
  bool g_top_unique = false;
  /// The same property for the f-basis (reported, not enforced).
  bool f_top_unique = false;

  /// Coordinates of a normal form; throws InvariantViolation for monomials
  /// outside the basis.
  std::vector<Scalar> coordinates(const Polynomial& reduced) const;
  Polynomial from_coordinates(const std::vector<Scalar>& coords) const;
  Polynomial reduce(const Polynomial& p) const { return normal_form(p, gb); }

 private:
  friend MilnorAlgebra milnor_algebra(const Polynomial&, const Weights&, bool);
  std::map<Monomial, std::size_t> index_;
};

/// Throws NotTame when `require_tame` and f is not tame; throws
/// InfiniteMilnor when V_f itself is infinite dimensional.
MilnorAlgebra milnor_algebra(const Polynomial& f, const Weights& w = {}, bool require_tame = true);

/// Multiplication by f on V_f; column i holds the coordinates of NF(f*basis_i).
struct MultOperator {
  MatrixK matrix;
};

MultOperator build_Af(const MilnorAlgebra& ma);
UniPoly min_poly_Af(const MultOperator& op);

struct CriticalFactor {
  UniPoly factor;
  unsigned multiplicity = 0;
  /// Explicit root for linear factors.
  std::optional<Scalar> root;
};

/// The factor t (if present) first, then the squarefree decomposition of the rest.
std::vector<CriticalFactor> critical_value_factors(const UniPoly& p);
/// Multiplicity of the root 0.
unsigned exponent(const UniPoly& p);

struct JordanProfile {
  UniPoly eigen_factor;
  /// block size -> number of blocks, summed over the roots of eigen_factor.
  std::map<std::size_t, std::size_t> blocks;
  /// rank(h(A)^k) for k = 0, 1, ... until it stabilises.
  std::vector<std::size_t> ranks;

  std::size_t dimension() const;
  std::size_t block_count() const;
  std::size_t largest_block() const;
  std::string to_string() const;
};

/// Throws FactorNotDividing when h does not divide `minpoly`.
JordanProfile jordan_profile(const MultOperator& op, const UniPoly& h, const UniPoly& minpoly);
JordanProfile jordan_profile(const MultOperator& op, const UniPoly& h);

/// Blocks at 0 of size at most 2 and not all of size 2.
bool jordan_blocks_bounded(const JordanProfile& at_zero);

/// Representative of q(f) in V_f, p = t*q. Throws SmoothCurve when p(0) != 0.
Polynomial theta_f(const MilnorAlgebra& ma, const MultOperator& op, const UniPoly& minpoly);

/// theta * V_f == ker(A_f). Throws NotInKernel.
bool check_kernel_condition(const MilnorAlgebra& ma, const MultOperator& op, const Polynomial& theta);

}  // namespace invcurve
