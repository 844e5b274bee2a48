#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace corekit {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Constraint,
  Unsupported,
  BudgetExceeded,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace corekit
