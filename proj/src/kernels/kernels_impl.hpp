#pragma once

#include "toporisk/kernels.hpp"

namespace toporisk::kernels {

namespace scalar {
void distances_to(ColumnsView points, const double* query, double* out);
double min_sq_distance(ColumnsView points, const double* query);
}  // namespace scalar

#if defined(TOPORISK_HAVE_AVX2)
namespace avx2 {
void distances_to(ColumnsView points, const double* query, double* out);
double min_sq_distance(ColumnsView points, const double* query);
}  // namespace avx2
#endif

}  // namespace toporisk::kernels
