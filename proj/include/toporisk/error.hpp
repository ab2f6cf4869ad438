#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toporisk {

enum class ErrorCode {
  EmptyInput,
  MissingColumn,
  MalformedRow,
  NonPositivePrice,
  NonMonotonicTimestamps,
  WrongKind,
  TooShort,
  ZeroVariance,
  InvalidConfig,
  SeriesTooShort,
  DimensionTooLarge,
  UnsupportedDimension,
  FaceNotFound,
  DimensionMismatch,
  ZeroVolatility,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `index()` carries the offending row
/// or element position for errors that have one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  const std::string& detail() const noexcept { return detail_; }

 protected:
  Error(ErrorCode code, std::string detail, std::optional<std::size_t> index,
        const std::string& what);

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::string detail_;
};

/// An Error re-raised by the pipeline with the name of the stage that failed.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause);

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace toporisk
