#ifndef GFP_ERRORS_HPP
#define GFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfp {

// Base class for every error thrown by the library. The `kind()` string is
// stable and machine-readable; the CLI serialises it into error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define GFP_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}      \
  }

GFP_DEFINE_ERROR(InvalidCoefficients);
GFP_DEFINE_ERROR(PoleAtK);
GFP_DEFINE_ERROR(SingularDenominator);
GFP_DEFINE_ERROR(PoleHit);
GFP_DEFINE_ERROR(WrongFamily);
GFP_DEFINE_ERROR(NonpositivePotential);
GFP_DEFINE_ERROR(BtPole);
GFP_DEFINE_ERROR(AllCoefficientsZero);
GFP_DEFINE_ERROR(ParallelTrajectories);
GFP_DEFINE_ERROR(DegenerateDirection);
GFP_DEFINE_ERROR(EmptyWindow);
GFP_DEFINE_ERROR(ZeroField);
GFP_DEFINE_ERROR(SeedValidationError);
GFP_DEFINE_ERROR(ParseError);
GFP_DEFINE_ERROR(ValidationError);
GFP_DEFINE_ERROR(NumericalFailure);

#undef GFP_DEFINE_ERROR

// Raised by the staggered integrator; carries the offending step.
class ZeroCrossing : public Error {
 public:
  ZeroCrossing(int step, const std::string& msg)
      : Error("ZeroCrossing", "step " + std::to_string(step) + ": " + msg),
        step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

}  // namespace gfp

#endif  // GFP_ERRORS_HPP
