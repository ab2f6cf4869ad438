#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toporisk/diagram.hpp"
#include "toporisk/rips.hpp"

namespace toporisk {

using ColumnIndex = std::uint32_t;

/// Sparse boundary matrix over the two-element field, one column per
/// simplex in filtration order. Column entries are ascending row indices.
class BoundaryMatrix {
 public:
  BoundaryMatrix() : offsets_{0} {}

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::span<const ColumnIndex> column(std::size_t j) const noexcept {
    return {entries_.data() + offsets_[j], entries_.data() + offsets_[j + 1]};
  }
  /// Simplex dimension of column j (vertex columns are empty).
  std::size_t dim(std::size_t j) const noexcept {
    const auto len = offsets_[j + 1] - offsets_[j];
    return len == 0 ? 0 : len - 1;
  }
  std::size_t max_dim() const noexcept;

  /// Appends a column; entries must be ascending and refer to earlier columns.
  void push_column(std::span<const ColumnIndex> entries);

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<ColumnIndex> entries_;
};

/// Throws FaceNotFound when a face is missing or does not precede its coface.
BoundaryMatrix build_boundary_matrix(const Filtration& filtration);

struct PersistencePair {
  ColumnIndex birth;
  ColumnIndex death;
  auto operator<=>(const PersistencePair&) const = default;
};

/// Index-level interval decomposition. `pairs` ascend by birth and
/// `essentials` ascend.
struct Pairing {
  std::vector<PersistencePair> pairs;
  std::vector<ColumnIndex> essentials;
  bool operator==(const Pairing&) const = default;
};

/// Column reduction with clearing: dimensions are processed from the top
/// down and columns already known to be births are skipped.
Pairing reduce(const BoundaryMatrix& matrix);

/// Plain left-to-right column elimination. Kept as the reference the
/// optimised reduction is tested against.
Pairing reduce_reference(const BoundaryMatrix& matrix);

/// Diagrams for dimensions 0..max_homology_dim. Zero-persistence pairs are
/// counted but not stored.
std::vector<PersistenceDiagram> extract_diagrams(const Pairing& pairing,
                                                 const Filtration& filtration,
                                                 std::size_t max_homology_dim);

}  // namespace toporisk
