#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toporisk {

enum class SeriesKind { Price, LogReturn, Normalized };

std::string_view to_string(SeriesKind kind) noexcept;

/// A scalar series with optional epoch-second timestamps of the same length.
struct TimeSeries {
  std::vector<double> values;
  std::optional<std::vector<std::int64_t>> timestamps;
  SeriesKind kind = SeriesKind::Price;

  std::size_t size() const noexcept { return values.size(); }
  std::span<const double> view() const noexcept { return values; }

  bool operator==(const TimeSeries&) const = default;
};

/// Column selection for price files. The first row is always a header.
struct CsvConfig {
  std::string price_column = "price";
  std::optional<std::string> timestamp_column;
};

/// Parses comma-separated UTF-8 text into a Price series.
/// Row indices in errors count data lines, starting at 1 after the header.
TimeSeries parse_price_csv(std::string_view text, const CsvConfig& config);

/// ln(p[t+1] / p[t]). Timestamps, if any, follow the later price of each pair.
TimeSeries log_returns(const TimeSeries& prices);

/// (x - mean) / stddev with the population (1/N) standard deviation.
TimeSeries zscore_normalize(const TimeSeries& series);

}  // namespace toporisk
