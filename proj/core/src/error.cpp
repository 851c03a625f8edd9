#include "mfcc/error.hpp"

namespace mfcc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::invalid_value: return "invalid-value";
    case ErrorCode::domain: return "domain";
    case ErrorCode::invalid_interval: return "invalid-interval";
    case ErrorCode::not_increasing: return "not-increasing";
    case ErrorCode::oscillator_not_monotone: return "oscillator-not-monotone";
    case ErrorCode::stationary_point: return "stationary-point-detected";
    case ErrorCode::evaluation: return "evaluation-error";
    case ErrorCode::invalid_nodes: return "invalid-nodes";
    case ErrorCode::oracle_failure: return "oracle-failure";
    case ErrorCode::fallback_required: return "fallback-required";
    case ErrorCode::split_required: return "split-required";
  }
  return "unknown";
}

}  // namespace mfcc
