#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padw {

enum class ErrorCode {
  InvalidArgument,
  PrecisionExhausted,
  AmbiguousZero,
  DivisionByZero,
  DivergentInput,
  DivergentRadius,
  NoConvergence,
  InvalidWitness,
  ParseError,
};

/// Stable upper-case name used in CLI diagnostics, e.g. "DIVERGENT_INPUT".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace padw
