#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blockroots {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NonFiniteEntry,
  ParseError,
  NotMonic,
  SingularMatrix,
  NoConvergence,
  SingularCoefficient,
  SingularPivot,
  SingularStep,
  StagnantWithoutResidual,
  SingularFrechet,
  SingularALast,
  InsufficientTrace,
  SingularKroneckerSystem,
  RankDeficientQ,
  InputNotSolvent,
  RankDeficientTransformer,
  IncompleteSet,
  RankDeficientG,
  DeflationResidualLarge,
  SpectrumOverlap,
  ResidualTooLarge,
  SingularLeadingCoefficient,
  NumeratorFactorizationFailed,
  SingularAtLambda,
};

std::string_view to_string(ErrorCode code) noexcept;

// Input/usage problems map to CLI exit code 1, everything else to 2.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  // Block, coefficient, pivot or stage index the failure refers to, if any.
  std::optional<std::size_t> index() const noexcept { return index_; }
  // Message without the error-code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::string detail_;
};

}  // namespace blockroots
