#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace toporisk::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{Isa::Scalar, &scalar::distances_to,
                                 &scalar::min_sq_distance};
  return table;
}

const KernelTable* avx2_kernels() noexcept {
#if defined(TOPORISK_HAVE_AVX2)
  static const KernelTable table{Isa::Avx2, &avx2::distances_to, &avx2::min_sq_distance};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* force = std::getenv("TOPORISK_FORCE_SCALAR");
    if (force != nullptr && std::string_view(force) == "1") return scalar_kernels();
    if (const KernelTable* v = avx2_kernels()) return *v;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace toporisk::kernels
