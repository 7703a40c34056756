#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dqf {

enum class Errc {
  NotInvertible,
  NormNotScalar,
  DivisorNotInvertible,
  NotAZero,
  IllConditioned,
  NotFactorizable,
  SingularSystem,
  WeightsMismatch,
  PrimalHasRealFactor,
  PrimalDivides,
  NotADivisor,
  NonInvertibleRemainder,
  InfeasiblePlan,
  RepeatedLinearPrimal,
  ZeroPrimal,
  IsTranslation,
  DegenerateFactor,
  ZeroDirection,
  SyntaxError,
  NonPolynomial,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NormNotScalar: return "NormNotScalar";
    case Errc::DivisorNotInvertible: return "DivisorNotInvertible";
    case Errc::NotAZero: return "NotAZero";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::NotFactorizable: return "NotFactorizable";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::WeightsMismatch: return "WeightsMismatch";
    case Errc::PrimalHasRealFactor: return "PrimalHasRealFactor";
    case Errc::PrimalDivides: return "PrimalDivides";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::NonInvertibleRemainder: return "NonInvertibleRemainder";
    case Errc::InfeasiblePlan: return "InfeasiblePlan";
    case Errc::RepeatedLinearPrimal: return "RepeatedLinearPrimal";
    case Errc::ZeroPrimal: return "ZeroPrimal";
    case Errc::IsTranslation: return "IsTranslation";
    case Errc::DegenerateFactor: return "DegenerateFactor";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonPolynomial: return "NonPolynomial";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes so
/// callers can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dqf
