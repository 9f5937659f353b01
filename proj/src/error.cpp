#include "blockroots/error.hpp"

namespace blockroots {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularCoefficient: return "SingularCoefficient";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::SingularStep: return "SingularStep";
    case ErrorCode::StagnantWithoutResidual: return "StagnantWithoutResidual";
    case ErrorCode::SingularFrechet: return "SingularFrechet";
    case ErrorCode::SingularALast: return "SingularALast";
    case ErrorCode::InsufficientTrace: return "InsufficientTrace";
    case ErrorCode::SingularKroneckerSystem: return "SingularKroneckerSystem";
    case ErrorCode::RankDeficientQ: return "RankDeficientQ";
    case ErrorCode::InputNotSolvent: return "InputNotSolvent";
    case ErrorCode::RankDeficientTransformer: return "RankDeficientTransformer";
    case ErrorCode::IncompleteSet: return "IncompleteSet";
    case ErrorCode::RankDeficientG: return "RankDeficientG";
    case ErrorCode::DeflationResidualLarge: return "DeflationResidualLarge";
    case ErrorCode::SpectrumOverlap: return "SpectrumOverlap";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
    case ErrorCode::NumeratorFactorizationFailed: return "NumeratorFactorizationFailed";
    case ErrorCode::SingularAtLambda: return "SingularAtLambda";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonFiniteEntry:
    case ErrorCode::ParseError:
    case ErrorCode::NotMonic:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index),
      detail_(message) {}

}  // namespace blockroots
