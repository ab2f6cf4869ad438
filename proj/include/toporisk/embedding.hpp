#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toporisk/ingest.hpp"

namespace toporisk {

/// Delay-coordinate parameters: dimension m, lag tau, and an optional guess d
/// of the attractor dimension used only for the m > 2d diagnostic.
struct EmbeddingConfig {
  std::size_t dimension = 5;
  std::size_t lag = 1;
  std::optional<std::size_t> assumed_attractor_dim;
};

/// N points in R^m, stored row-major. Immutable once built.
class PointCloud {
 public:
  PointCloud(std::size_t dim, std::vector<double> row_major);

  std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> point(std::size_t i) const noexcept {
    return {data_.data() + i * dim_, dim_};
  }
  double operator()(std::size_t i, std::size_t k) const noexcept {
    return data_[i * dim_ + k];
  }
  std::span<const double> data() const noexcept { return data_; }

  /// Column-major copy: coordinate k of every point is contiguous.
  std::vector<double> columns() const;
  PointCloud scaled(double factor) const;

  bool operator==(const PointCloud&) const = default;

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

enum class EmbeddingStatus { Ok, Warning };

struct EmbeddingCheck {
  EmbeddingStatus status = EmbeddingStatus::Ok;
  std::string message;
};

/// Ok when no attractor dimension is given or m > 2d; Warning otherwise.
EmbeddingCheck check_embedding_dim(const EmbeddingConfig& config) noexcept;

/// point[t][j] = series[t + j*lag], yielding T - (m-1)*lag points.
PointCloud delay_embed(std::span<const double> series, const EmbeddingConfig& config);
PointCloud delay_embed(const TimeSeries& series, const EmbeddingConfig& config);

}  // namespace toporisk
