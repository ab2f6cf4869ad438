#include "toporisk/error.hpp"

namespace toporisk {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonPositivePrice: return "NonPositivePrice";
    case ErrorCode::NonMonotonicTimestamps: return "NonMonotonicTimestamps";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::FaceNotFound: return "FaceNotFound";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVolatility: return "ZeroVolatility";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorCode code, const std::string& detail,
                     std::optional<std::size_t> index) {
  std::string out{to_string(code)};
  if (index) out += "(" + std::to_string(*index) + ")";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail,
             std::optional<std::size_t> index)
    : Error(code, detail, index, describe(code, detail, index)) {}

Error::Error(ErrorCode code, std::string detail,
             std::optional<std::size_t> index, const std::string& what)
    : std::runtime_error(what),
      code_(code),
      index_(index),
      detail_(std::move(detail)) {}

StageError::StageError(std::string stage, const Error& cause)
    : Error(cause.code(), cause.detail(), cause.index(),
            "stage '" + stage + "': " + cause.what()),
      stage_(std::move(stage)) {}

}  // namespace toporisk
