#include <immintrin.h>

#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

namespace toporisk::kernels::avx2 {

namespace {

// Squared distances of points [j, j+4) to the query.
inline __m256d sq_distance4(ColumnsView points, const double* query, std::size_t j) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t k = 0; k < points.dim; ++k) {
    const __m256d c = _mm256_loadu_pd(points.base + k * points.stride + j);
    const __m256d d = _mm256_sub_pd(c, _mm256_set1_pd(query[k]));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  return acc;
}

inline double sq_distance1(ColumnsView points, const double* query, std::size_t j) {
  double acc = 0.0;
  for (std::size_t k = 0; k < points.dim; ++k) {
    const double d = points.base[k * points.stride + j] - query[k];
    acc = acc + d * d;
  }
  return acc;
}

}  // namespace

void distances_to(ColumnsView points, const double* query, double* out) {
  std::size_t j = 0;
  for (; j + 4 <= points.count; j += 4) {
    _mm256_storeu_pd(out + j, _mm256_sqrt_pd(sq_distance4(points, query, j)));
  }
  for (; j < points.count; ++j) out[j] = std::sqrt(sq_distance1(points, query, j));
}

double min_sq_distance(ColumnsView points, const double* query) {
  std::size_t j = 0;
  double best = std::numeric_limits<double>::infinity();
  if (points.count >= 4) {
    __m256d lanes = _mm256_set1_pd(best);
    for (; j + 4 <= points.count; j += 4) {
      lanes = _mm256_min_pd(lanes, sq_distance4(points, query, j));
    }
    alignas(32) double tmp[4];
    _mm256_store_pd(tmp, lanes);
    for (double v : tmp) best = v < best ? v : best;
  }
  for (; j < points.count; ++j) {
    const double acc = sq_distance1(points, query, j);
    if (acc < best) best = acc;
  }
  return best;
}

}  // namespace toporisk::kernels::avx2
