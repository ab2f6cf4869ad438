#include "toporisk/embedding.hpp"

#include <cmath>

#include "toporisk/error.hpp"

namespace toporisk {

PointCloud::PointCloud(std::size_t dim, std::vector<double> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (dim_ == 0) throw Error(ErrorCode::InvalidConfig, "point dimension must be >= 1");
  if (data_.empty() || data_.size() % dim_ != 0) {
    throw Error(ErrorCode::InvalidConfig,
                "coordinate count " + std::to_string(data_.size()) +
                    " is not a positive multiple of dimension " + std::to_string(dim_));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw Error(ErrorCode::InvalidConfig, "non-finite coordinate", i / dim_);
    }
  }
}

std::vector<double> PointCloud::columns() const {
  const std::size_t n = size();
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < dim_; ++k) out[k * n + i] = data_[i * dim_ + k];
  return out;
}

PointCloud PointCloud::scaled(double factor) const {
  std::vector<double> out = data_;
  for (double& v : out) v *= factor;
  return {dim_, std::move(out)};
}

EmbeddingCheck check_embedding_dim(const EmbeddingConfig& config) noexcept {
  if (!config.assumed_attractor_dim) return {};
  const std::size_t d = *config.assumed_attractor_dim;
  if (config.dimension > 2 * d) return {};
  return {EmbeddingStatus::Warning,
          "m <= 2d (m=" + std::to_string(config.dimension) + ", d=" + std::to_string(d) +
              "): delay map is not guaranteed to be an embedding"};
}

PointCloud delay_embed(std::span<const double> series, const EmbeddingConfig& config) {
  const std::size_t m = config.dimension;
  const std::size_t lag = config.lag;
  if (m == 0 || lag == 0) {
    throw Error(ErrorCode::InvalidConfig, "embedding dimension and lag must be >= 1");
  }
  const std::size_t required = (m - 1) * lag + 1;
  if (series.size() < required) {
    throw Error(ErrorCode::SeriesTooShort,
                "required " + std::to_string(required) + ", actual " +
                    std::to_string(series.size()));
  }
  const std::size_t n = series.size() - (m - 1) * lag;
  std::vector<double> rows;
  rows.reserve(n * m);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < m; ++j) rows.push_back(series[t + j * lag]);
  return {m, std::move(rows)};
}

PointCloud delay_embed(const TimeSeries& series, const EmbeddingConfig& config) {
  return delay_embed(series.view(), config);
}

}  // namespace toporisk
