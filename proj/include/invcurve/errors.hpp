#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace invcurve {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define INVCURVE_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  };

INVCURVE_DEFINE_ERROR(DivisionByZero)
INVCURVE_DEFINE_ERROR(FieldMismatch)
INVCURVE_DEFINE_ERROR(InvalidField)
INVCURVE_DEFINE_ERROR(UnknownSymbol)
INVCURVE_DEFINE_ERROR(ZeroInput)
INVCURVE_DEFINE_ERROR(ExponentOverflow)
INVCURVE_DEFINE_ERROR(RankMismatch)
INVCURVE_DEFINE_ERROR(NotTame)
INVCURVE_DEFINE_ERROR(InfiniteMilnor)
INVCURVE_DEFINE_ERROR(NotSquare)
INVCURVE_DEFINE_ERROR(FactorNotDividing)
INVCURVE_DEFINE_ERROR(SmoothCurve)
INVCURVE_DEFINE_ERROR(NotSmooth)
INVCURVE_DEFINE_ERROR(NotInKernel)
INVCURVE_DEFINE_ERROR(NotInJacobian)
INVCURVE_DEFINE_ERROR(NotHomogeneous)
INVCURVE_DEFINE_ERROR(NotTangent)
INVCURVE_DEFINE_ERROR(MissingEmbedding)
INVCURVE_DEFINE_ERROR(DegenerateWindow)
INVCURVE_DEFINE_ERROR(InvariantViolation)

#undef INVCURVE_DEFINE_ERROR

/// Parse failure; `position()` is the 0-based offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Error raised inside the analysis pipeline, tagged with its stage.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what, bool invariant)
      : Error(stage + ": " + what), stage_(std::move(stage)), invariant_(invariant) {}

  const std::string& stage() const noexcept { return stage_; }
  bool invariant_violation() const noexcept { return invariant_; }

 private:
  std::string stage_;
  bool invariant_;
};

}  // namespace invcurve
