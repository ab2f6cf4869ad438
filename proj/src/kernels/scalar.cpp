#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

namespace toporisk::kernels::scalar {

void distances_to(ColumnsView points, const double* query, double* out) {
  for (std::size_t j = 0; j < points.count; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < points.dim; ++k) {
      const double d = points.base[k * points.stride + j] - query[k];
      acc = acc + d * d;
    }
    out[j] = std::sqrt(acc);
  }
}

double min_sq_distance(ColumnsView points, const double* query) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < points.count; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < points.dim; ++k) {
      const double d = points.base[k * points.stride + j] - query[k];
      acc = acc + d * d;
    }
    if (acc < best) best = acc;
  }
  return best;
}

}  // namespace toporisk::kernels::scalar
