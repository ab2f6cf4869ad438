#pragma once

// Distance kernels with a scalar reference and optional AVX2 variant.
//
// Both variants accumulate squared coordinate differences in ascending
// coordinate order without fused multiply-add, so their results are
// bit-identical; the dispatcher is free to pick either.

#include <cstddef>
#include <string_view>

namespace toporisk::kernels {

/// Column-major point block: coordinate k of point j is base[k * stride + j].
struct ColumnsView {
  const double* base = nullptr;
  std::size_t stride = 0;
  std::size_t count = 0;
  std::size_t dim = 0;

  /// Points [begin, count).
  ColumnsView tail(std::size_t begin) const noexcept {
    return {base + begin, stride, count - begin, dim};
  }
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// out[j] = Euclidean distance from `query` (dim values) to point j.
  void (*distances_to)(ColumnsView points, const double* query, double* out);
  /// min_j squared distance from `query` to point j; +inf for an empty block.
  double (*min_sq_distance)(ColumnsView points, const double* query);
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// The best table for this CPU. Setting TOPORISK_FORCE_SCALAR=1 in the
/// environment pins the scalar path.
const KernelTable& active_kernels() noexcept;

}  // namespace toporisk::kernels
