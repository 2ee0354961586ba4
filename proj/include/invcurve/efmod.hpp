#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invcurve/milnor.hpp"

namespace invcurve {

enum class GeneratorKind { trivial_smooth, four_generator, syzygy_raw, minimal, candidate };
std::string to_string(GeneratorKind k);

/// A generating set (or candidate generating set) of E_f.
struct EfGenerators {
  GeneratorKind kind = GeneratorKind::candidate;
  Polynomial f;
  std::vector<OneForm> forms;
};

/// df ∧ w is divisible by f.
bool is_tangent(const OneForm& w, const Polynomial& f);

/// Projection of Syz(-f_y, f_x, f) to its first two components.
EfGenerators ef_from_syzygies(const Polynomial& f);

/// The form -B dx + A dy where f*theta = A f_x + B f_y. Throws NotInJacobian.
OneForm omega_f(const MilnorAlgebra& ma, const Polynomial& theta);

/// [f dx, f dy, df, omega].
EfGenerators four_generator_set(const Polynomial& f, const OneForm& omega);

struct GenerationVerdict {
  bool generates = false;
  /// First reference form outside the candidate module.
  std::optional<std::size_t> witness_index;
  std::optional<OneForm> witness;
  /// For each reference form, its coefficients in the candidate forms.
  std::vector<std::vector<Polynomial>> certificates;
};

/// Every reference form lies in the module spanned by the candidate.
GenerationVerdict verify_generation(const EfGenerators& candidate, const EfGenerators& reference);
bool same_module(const std::vector<OneForm>& a, const std::vector<OneForm>& b);

/// Inter-reduce, then greedily drop members in order of (max total degree,
/// printed form) while the rest still generate.
EfGenerators minimal_generators(const EfGenerators& gens);

struct SaitoVerdict {
  bool free = false;
  std::pair<OneForm, OneForm> pair;
  /// w0 ∧ w1 = constant * f dx∧dy when free.
  std::optional<Scalar> constant;
};

/// Throws NotTangent.
SaitoVerdict saito_check(const OneForm& w0, const OneForm& w1, const Polynomial& f);

/// [f dx, f dy, df]; requires p(0) != 0 for the minimal polynomial p of A_f.
/// Throws NotSmooth.
EfGenerators smooth_shortcut(const Polynomial& f, const UniPoly& minpoly);
EfGenerators smooth_shortcut(const Polynomial& f);

/// (dg, eta) with eta = (alpha1 x dy - alpha2 y dx)/deg g. Throws NotHomogeneous.
std::pair<OneForm, OneForm> quasihomog_pair(const Polynomial& g, const Weights& w);

}  // namespace invcurve
