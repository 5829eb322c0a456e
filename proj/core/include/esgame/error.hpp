#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace esg {

enum class ErrorCode {
  DuplicatePoint,
  DegenerateInput,
  DegeneratePlacement,
  LayerCountMismatch,
  NoFeasiblePoint,
  NoWinningMove,
  DepthExceeded,
  GeneralPositionViolation,
  GameAlreadyFinished,
  MalformedTrace,
  InvariantViolation,
  SamplerFailure,
  InvalidArgument,
};

// Stable machine-readable name, used in HTTP error bodies and CLI diagnostics.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace esg
