#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "toporisk/embedding.hpp"

namespace toporisk {

/// Symmetric n x n matrix of Euclidean distances with a zero diagonal.
class DistanceMatrix {
 public:
  /// Validates symmetry, zero diagonal, finiteness and non-negativity.
  DistanceMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * n_ + j];
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * n_, n_};
  }
  double max() const noexcept;

 private:
  struct Trusted {};
  DistanceMatrix(Trusted, std::size_t n, std::vector<double> entries)
      : n_(n), entries_(std::move(entries)) {}
  friend DistanceMatrix pairwise_distances(const PointCloud& cloud);

  std::size_t n_;
  std::vector<double> entries_;
};

DistanceMatrix pairwise_distances(const PointCloud& cloud);

/// Largest simplex dimension the fixed-size vertex storage supports.
inline constexpr std::size_t kMaxSimplexDim = 3;

using VertexIndex = std::uint32_t;

struct Simplex {
  std::array<VertexIndex, kMaxSimplexDim + 1> vertices{};  // ascending; unused slots 0
  double value = 0.0;
  std::uint8_t dim = 0;

  std::span<const VertexIndex> vertex_span() const noexcept {
    return {vertices.data(), std::size_t{dim} + 1u};
  }
  bool operator==(const Simplex&) const = default;
};

/// Sorts the given vertices.
Simplex make_simplex(std::initializer_list<VertexIndex> vertices, double value);

/// Filtration order: value, then dimension, then lexicographic vertices.
bool filtration_less(const Simplex& a, const Simplex& b) noexcept;

/// Simplices in filtration order over `vertex_count` points. The constructor
/// stores what it is given; `is_ordered()` checks the ordering invariant and
/// face closure is checked when building a boundary matrix.
class Filtration {
 public:
  Filtration() = default;
  Filtration(std::size_t vertex_count, std::vector<Simplex> simplices)
      : vertex_count_(vertex_count), simplices_(std::move(simplices)) {}

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  const Simplex& operator[](std::size_t i) const noexcept { return simplices_[i]; }
  auto begin() const noexcept { return simplices_.begin(); }
  auto end() const noexcept { return simplices_.end(); }
  std::span<const Simplex> simplices() const noexcept { return simplices_; }

  std::size_t max_dim() const noexcept;
  /// Number of simplices of each dimension 0..max_dim().
  std::vector<std::size_t> count_by_dim() const;
  bool is_ordered() const noexcept;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> simplices_;
};

/// Every simplex of dimension <= max_dim with diameter <= epsilon_max
/// (nullopt: no truncation).
Filtration build_rips_filtration(const DistanceMatrix& dist, std::size_t max_dim,
                                 std::optional<double> epsilon_max = std::nullopt);

}  // namespace toporisk
