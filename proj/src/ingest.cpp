#include "toporisk/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "toporisk/error.hpp"

namespace toporisk {

std::string_view to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::Price: return "Price";
    case SeriesKind::LogReturn: return "LogReturn";
    case SeriesKind::Normalized: return "Normalized";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

template <typename T>
std::optional<T> parse_number(std::string_view field) {
  if (field.empty()) return std::nullopt;
  if (field.front() == '+') field.remove_prefix(1);
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) return std::nullopt;
  }
  return value;
}

std::size_t find_column(const std::vector<std::string_view>& header,
                        const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw Error(ErrorCode::MissingColumn, "no column named '" + name + "'");
  }
  return static_cast<std::size_t>(it - header.begin());
}

void require_kind(const TimeSeries& s, SeriesKind expected) {
  if (s.kind != expected) {
    throw Error(ErrorCode::WrongKind,
                "expected " + std::string(to_string(expected)) + " series, got " +
                    std::string(to_string(s.kind)));
  }
}

}  // namespace

TimeSeries parse_price_csv(std::string_view text, const CsvConfig& config) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  const auto header_it = std::find_if(lines.begin(), lines.end(), [](auto l) {
    return !trim(l).empty();
  });
  if (header_it == lines.end()) throw Error(ErrorCode::EmptyInput, "no header row");

  const auto header = split_fields(*header_it);
  const auto price_col = find_column(header, config.price_column);
  std::optional<std::size_t> time_col;
  if (config.timestamp_column) time_col = find_column(header, *config.timestamp_column);

  TimeSeries series;
  series.kind = SeriesKind::Price;
  std::vector<std::int64_t> stamps;

  std::size_t row = 0;
  for (auto it = header_it + 1; it != lines.end(); ++it) {
    ++row;
    if (trim(*it).empty()) continue;
    const auto fields = split_fields(*it);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::MalformedRow,
                  "expected " + std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()),
                  row);
    }
    const auto price = parse_number<double>(fields[price_col]);
    if (!price) {
      throw Error(ErrorCode::MalformedRow,
                  "unparseable price '" + std::string(fields[price_col]) + "'", row);
    }
    if (*price <= 0.0) throw Error(ErrorCode::NonPositivePrice, "price must be > 0", row);
    if (time_col) {
      const auto stamp = parse_number<std::int64_t>(fields[*time_col]);
      if (!stamp) {
        throw Error(ErrorCode::MalformedRow,
                    "unparseable timestamp '" + std::string(fields[*time_col]) + "'",
                    row);
      }
      if (!stamps.empty() && *stamp <= stamps.back()) {
        throw Error(ErrorCode::NonMonotonicTimestamps,
                    "timestamps must be strictly increasing", row);
      }
      stamps.push_back(*stamp);
    }
    series.values.push_back(*price);
  }

  if (series.values.empty()) throw Error(ErrorCode::EmptyInput, "no data rows");
  if (time_col) series.timestamps = std::move(stamps);
  return series;
}

TimeSeries log_returns(const TimeSeries& prices) {
  require_kind(prices, SeriesKind::Price);
  if (prices.size() < 2) {
    throw Error(ErrorCode::TooShort, "need at least two prices, got " +
                                         std::to_string(prices.size()));
  }
  TimeSeries out;
  out.kind = SeriesKind::LogReturn;
  out.values.reserve(prices.size() - 1);
  for (std::size_t t = 0; t + 1 < prices.size(); ++t) {
    out.values.push_back(std::log(prices.values[t + 1] / prices.values[t]));
  }
  if (prices.timestamps) {
    out.timestamps.emplace(prices.timestamps->begin() + 1, prices.timestamps->end());
  }
  return out;
}

TimeSeries zscore_normalize(const TimeSeries& series) {
  // Normalized input is accepted so the transform can be re-applied.
  if (series.kind != SeriesKind::Normalized) require_kind(series, SeriesKind::LogReturn);
  if (series.size() < 2) {
    throw Error(ErrorCode::TooShort, "need at least two values, got " +
                                         std::to_string(series.size()));
  }
  const auto& x = series.values;
  if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); })) {
    throw Error(ErrorCode::ZeroVariance, "constant series cannot be normalized");
  }
  const double n = static_cast<double>(x.size());
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double stddev = std::sqrt(ss / n);
  if (!(stddev > 0.0)) {
    throw Error(ErrorCode::ZeroVariance, "standard deviation underflows to zero");
  }

  TimeSeries out;
  out.kind = SeriesKind::Normalized;
  out.timestamps = series.timestamps;
  out.values.reserve(x.size());
  for (double v : x) out.values.push_back((v - mean) / stddev);
  return out;
}

}  // namespace toporisk
