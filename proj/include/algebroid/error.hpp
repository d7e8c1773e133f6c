#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algebroid {

enum class ErrorCode {
  ChainConditionViolated,
  DegreeOutOfRange,
  NonsimpleZero,
  NotStabilized,
  NotAbelian,
  ValidationFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace algebroid
