#pragma once

#include <stdexcept>
#include <string>

namespace qsq {

/// Machine-readable failure categories. The CLI prints the code verbatim.
enum class ErrorCode {
  invalid_argument,
  grid_too_small,
  out_of_domain,
  no_convergence,
  malformed_input,
  precondition_failed,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::grid_too_small: return "grid_too_small";
    case ErrorCode::out_of_domain: return "out_of_domain";
    case ErrorCode::no_convergence: return "no_convergence";
    case ErrorCode::malformed_input: return "malformed_input";
    case ErrorCode::precondition_failed: return "precondition_failed";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qsq
