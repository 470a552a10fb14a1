#include "blackwell/error.hpp"

namespace blackwell {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::RowSumMismatch: return "RowSumMismatch";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TrivialExperiment: return "TrivialExperiment";
    case ErrorCode::InvalidLlr: return "InvalidLLR";
    case ErrorCode::MeanMismatch: return "MeanMismatch";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::NonConvexUtility: return "NonConvexUtility";
    case ErrorCode::OutOfSupport: return "OutOfSupport";
    case ErrorCode::NoEtaFound: return "NoEtaFound";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::StateMismatch: return "StateMismatch";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace blackwell
