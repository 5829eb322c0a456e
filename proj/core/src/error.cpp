#include "esgame/error.hpp"

namespace esg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicatePoint:
      return "duplicate_point";
    case ErrorCode::DegenerateInput:
      return "degenerate_input";
    case ErrorCode::DegeneratePlacement:
      return "degenerate_placement";
    case ErrorCode::LayerCountMismatch:
      return "layer_count_mismatch";
    case ErrorCode::NoFeasiblePoint:
      return "no_feasible_point";
    case ErrorCode::NoWinningMove:
      return "no_winning_move";
    case ErrorCode::DepthExceeded:
      return "depth_exceeded";
    case ErrorCode::GeneralPositionViolation:
      return "general_position";
    case ErrorCode::GameAlreadyFinished:
      return "game_finished";
    case ErrorCode::MalformedTrace:
      return "malformed_trace";
    case ErrorCode::InvariantViolation:
      return "invariant_violation";
    case ErrorCode::SamplerFailure:
      return "sampler_failure";
    case ErrorCode::InvalidArgument:
      return "invalid_argument";
  }
  return "unknown";
}

}  // namespace esg
