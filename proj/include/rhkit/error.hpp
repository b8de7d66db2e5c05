#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rhkit {

/// Domain errors raised by the library. Each maps to a stable name used by
/// the command-line front end in its JSON error objects.
enum class Errc {
  // eos
  InvalidEos,
  NonPositiveDensity,
  SoundSpeedUndefined,
  // kinematics
  DegenerateParametrization,
  SingularTangentMap,
  ZeroRelativeVelocity,
  InvalidFrame,
  // tensors
  NonPositiveReferenceDensity,
  StencilOutOfDomain,
  // shock
  ContactSurface,
  NotSupersonic,
  ExpansionShockRejected,
  RootNotBracketed,
  RatioOutOfRange,
  EnthalpyUnreachable,
  SingularF,
  // riemann
  VacuumFormation,
  NoBracket,
  UnsolvedInput,
};

constexpr std::string_view error_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidEos: return "InvalidEos";
    case Errc::NonPositiveDensity: return "NonPositiveDensity";
    case Errc::SoundSpeedUndefined: return "SoundSpeedUndefined";
    case Errc::DegenerateParametrization: return "DegenerateParametrization";
    case Errc::SingularTangentMap: return "SingularTangentMap";
    case Errc::ZeroRelativeVelocity: return "ZeroRelativeVelocity";
    case Errc::InvalidFrame: return "InvalidFrame";
    case Errc::NonPositiveReferenceDensity: return "NonPositiveReferenceDensity";
    case Errc::StencilOutOfDomain: return "StencilOutOfDomain";
    case Errc::ContactSurface: return "ContactSurface";
    case Errc::NotSupersonic: return "NotSupersonic";
    case Errc::ExpansionShockRejected: return "ExpansionShockRejected";
    case Errc::RootNotBracketed: return "RootNotBracketed";
    case Errc::RatioOutOfRange: return "RatioOutOfRange";
    case Errc::EnthalpyUnreachable: return "EnthalpyUnreachable";
    case Errc::SingularF: return "SingularF";
    case Errc::VacuumFormation: return "VacuumFormation";
    case Errc::NoBracket: return "NoBracket";
    case Errc::UnsolvedInput: return "UnsolvedInput";
  }
  return "Unknown";
}

constexpr std::string_view error_module(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidEos:
    case Errc::NonPositiveDensity:
    case Errc::SoundSpeedUndefined: return "eos";
    case Errc::DegenerateParametrization:
    case Errc::SingularTangentMap:
    case Errc::ZeroRelativeVelocity:
    case Errc::InvalidFrame: return "kinematics";
    case Errc::NonPositiveReferenceDensity:
    case Errc::StencilOutOfDomain: return "tensors";
    case Errc::VacuumFormation:
    case Errc::NoBracket:
    case Errc::UnsolvedInput: return "riemann";
    default: return "shock";
  }
}

class PhysicsError : public std::runtime_error {
 public:
  PhysicsError(Errc code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  std::string_view module() const noexcept { return error_module(code_); }

 private:
  Errc code_;
};

}  // namespace rhkit
