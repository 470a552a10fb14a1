#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blackwell {

enum class ErrorCode {
  ZeroEntry,
  RowSumMismatch,
  DuplicateLabel,
  SizeOverflow,
  DimensionMismatch,
  DomainError,
  TrivialExperiment,
  InvalidLlr,
  MeanMismatch,
  OracleDisagreement,
  NonConvexUtility,
  OutOfSupport,
  NoEtaFound,
  PreconditionFailed,
  UnknownFixture,
  SupportMismatch,
  NonGeneric,
  StateMismatch,
  IndexError,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blackwell
