#ifndef PUSHCAT_ERROR_HPP
#define PUSHCAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pushcat {

enum class ErrorCode {
  // core
  DanglingReference,
  NonAssociative,
  MissingIdentity,
  PartialComposition,
  NotFunctorial,
  NotFullyFaithful,
  NotSieve,
  NoTerminalObject,
  UnknownObject,
  // comma
  MismatchedTarget,
  // sset
  TruncationTooLow,
  NotSimplicial,
  // necklace
  BoundTooSmall,
  NotFullSubanima,
  // pushout
  NotDwyer,
  OracleDisagreement,
  NonStabilizedOracle,
  NotCertifiable,
  // reedy
  IdentityFactors,
  CompositionEscapes,
  NotMono,
  CanonicalMapMismatch,
  RepresentativeDisagreement,
  ExplosionGuard,
  NoFactorization,
  NotConservative,
  TruncationNotReedy,
  // io
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::MissingIdentity: return "MissingIdentity";
    case ErrorCode::PartialComposition: return "PartialComposition";
    case ErrorCode::NotFunctorial: return "NotFunctorial";
    case ErrorCode::NotFullyFaithful: return "NotFullyFaithful";
    case ErrorCode::NotSieve: return "NotSieve";
    case ErrorCode::NoTerminalObject: return "NoTerminalObject";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::MismatchedTarget: return "MismatchedTarget";
    case ErrorCode::TruncationTooLow: return "TruncationTooLow";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotFullSubanima: return "NotFullSubanima";
    case ErrorCode::NotDwyer: return "NotDwyer";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::NonStabilizedOracle: return "NonStabilizedOracle";
    case ErrorCode::NotCertifiable: return "NotCertifiable";
    case ErrorCode::IdentityFactors: return "IdentityFactors";
    case ErrorCode::CompositionEscapes: return "CompositionEscapes";
    case ErrorCode::NotMono: return "NotMono";
    case ErrorCode::CanonicalMapMismatch: return "CanonicalMapMismatch";
    case ErrorCode::RepresentativeDisagreement: return "RepresentativeDisagreement";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::NoFactorization: return "NoFactorization";
    case ErrorCode::NotConservative: return "NotConservative";
    case ErrorCode::TruncationNotReedy: return "TruncationNotReedy";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code and a
/// human-readable witness description.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace pushcat

#endif  // PUSHCAT_ERROR_HPP
