#include "algebroid/error.hpp"

namespace algebroid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ChainConditionViolated: return "CHAIN_CONDITION_VIOLATED";
    case ErrorCode::DegreeOutOfRange: return "DEGREE_OUT_OF_RANGE";
    case ErrorCode::NonsimpleZero: return "NONSIMPLE_ZERO";
    case ErrorCode::NotStabilized: return "NOT_STABILIZED";
    case ErrorCode::NotAbelian: return "NOT_ABELIAN";
    case ErrorCode::ValidationFailed: return "VALIDATION_FAILED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace algebroid
