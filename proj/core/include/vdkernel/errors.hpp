#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vdkernel {

enum class ErrorCode {
  InvalidInput,
  UnsupportedPair,
  SingularWeight,
  NoConvergence,
  NonFiniteF,
  InvalidPlan,
  ResourceGuard,
  ClockOverflow,
  EmptySample,
  UnsortedEdges,
  InsufficientSamples,
  UnsupportedPattern,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True for codes that describe bad caller input rather than a numerical
/// failure inside a well-posed computation.
constexpr bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::UnsupportedPair:
    case ErrorCode::SingularWeight:
    case ErrorCode::InvalidPlan:
    case ErrorCode::UnsortedEdges:
    case ErrorCode::UnsupportedPattern:
    case ErrorCode::InsufficientSamples:
    case ErrorCode::EmptySample:
      return true;
    default:
      return false;
  }
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

}  // namespace vdkernel
