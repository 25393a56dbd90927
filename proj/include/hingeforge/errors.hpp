#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hingeforge {

enum class ErrorCode {
  format_error,
  non_manifold,
  open_boundary,
  nonplanar_face,
  nonconvex_face,
  euler_violation,
  invalid_anchor,
  invalid_tree,
  crossing_trees,
  clearance_failure,
  not_a_net,
  forced_order_failure,
  glue_mismatch,
  internal_error,
};

const char* error_code_name(ErrorCode c);

// Process exit codes: 0 ok, 1 domain failure, 2 format error, 3 internal
// invariant violation.
int exit_code_for(ErrorCode c);

class PipelineError : public std::runtime_error {
 public:
  PipelineError(ErrorCode code, std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message),
        code_(code),
        stage_(std::move(stage)) {}

  ErrorCode code() const { return code_; }
  const std::string& stage() const { return stage_; }

 private:
  ErrorCode code_;
  std::string stage_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& stage,
                              const std::string& message) {
  throw PipelineError(code, stage, message);
}

}  // namespace hingeforge
