#ifndef GHCSERIES_ERRORS_HPP
#define GHCSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ghcseries {

/// Every failure raised by the library carries one of these kinds. The CLI
/// maps them onto exit codes (see exit_code_for).
enum class ErrorKind {
  UnsupportedAlgebra,
  DimensionMismatch,
  GroupMismatch,
  NotARoot,
  NonIntegralGrading,
  NotIntegrable,
  NoSl2Triple,
  InternalError,
  VirtualNotAllowed,
  IndexOutOfRange,
  WindowTooNarrow,
  OutOfRegime,
  UnsupportedLevi,
  UnsupportedRank,
  SingularBlockUnsupported,
  InternalInconsistency,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NonIntegralGrading: return "NonIntegralGrading";
    case ErrorKind::NotIntegrable: return "NotIntegrable";
    case ErrorKind::NoSl2Triple: return "NoSl2Triple";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::VirtualNotAllowed: return "VirtualNotAllowed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WindowTooNarrow: return "WindowTooNarrow";
    case ErrorKind::OutOfRegime: return "OutOfRegime";
    case ErrorKind::UnsupportedLevi: return "UnsupportedLevi";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::SingularBlockUnsupported: return "SingularBlockUnsupported";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// 2 = invalid input, 3 = unsupported regime, 4 = internal inconsistency.
constexpr int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedLevi:
    case ErrorKind::UnsupportedRank:
    case ErrorKind::SingularBlockUnsupported:
    case ErrorKind::UnsupportedAlgebra:
      return 3;
    case ErrorKind::InternalError:
    case ErrorKind::InternalInconsistency:
      return 4;
    default:
      return 2;
  }
}

}  // namespace ghcseries

#endif  // GHCSERIES_ERRORS_HPP
