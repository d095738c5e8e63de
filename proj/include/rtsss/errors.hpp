#ifndef RTSSS_ERRORS_HPP
#define RTSSS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace rtsss {

// Library-wide error codes. The CLI maps a subset of these onto its
// documented process exit codes.
enum class Errc {
  kNotPrime,
  kNotIrreducible,
  kDegreeMismatch,
  kFieldMismatch,
  kDivisionByZero,
  kDimensionMismatch,
  kDegreeTooLarge,
  kEmptyPointSet,
  kDependentPoints,
  kLengthMismatch,
  kBadParams,
  kFieldTooSmall,
  kFieldTooLarge,
  kInsufficientShares,
  kInconsistentShares,
  kNotInRepairSet,
  kNoRepairTableEntry,
  kWrongContributionCount,
  kRepairUnsolvable,
  kModeMismatch,
  kMixedSchemes,
  kWrongPacketSet,
  kTooLargeToEnumerate,
  kParamsUnsatisfiable,
  kFormatError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kNotIrreducible: return "NotIrreducible";
    case Errc::kDegreeMismatch: return "DegreeMismatch";
    case Errc::kFieldMismatch: return "FieldMismatch";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kDegreeTooLarge: return "DegreeTooLarge";
    case Errc::kEmptyPointSet: return "EmptyPointSet";
    case Errc::kDependentPoints: return "DependentPoints";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kBadParams: return "BadParams";
    case Errc::kFieldTooSmall: return "FieldTooSmall";
    case Errc::kFieldTooLarge: return "FieldTooLarge";
    case Errc::kInsufficientShares: return "InsufficientShares";
    case Errc::kInconsistentShares: return "InconsistentShares";
    case Errc::kNotInRepairSet: return "NotInRepairSet";
    case Errc::kNoRepairTableEntry: return "NoRepairTableEntry";
    case Errc::kWrongContributionCount: return "WrongContributionCount";
    case Errc::kRepairUnsolvable: return "RepairUnsolvable";
    case Errc::kModeMismatch: return "ModeMismatch";
    case Errc::kMixedSchemes: return "MixedSchemes";
    case Errc::kWrongPacketSet: return "WrongPacketSet";
    case Errc::kTooLargeToEnumerate: return "TooLargeToEnumerate";
    case Errc::kParamsUnsatisfiable: return "ParamsUnsatisfiable";
    case Errc::kFormatError: return "FormatError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace rtsss

#endif  // RTSSS_ERRORS_HPP
