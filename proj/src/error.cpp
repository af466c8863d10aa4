#include "padw/error.hpp"

namespace padw {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::PrecisionExhausted: return "PRECISION_EXHAUSTED";
    case ErrorCode::AmbiguousZero: return "AMBIGUOUS_ZERO";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::DivergentInput: return "DIVERGENT_INPUT";
    case ErrorCode::DivergentRadius: return "DIVERGENT_RADIUS";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::InvalidWitness: return "INVALID_WITNESS";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace padw
