#include "toporisk/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "toporisk/error.hpp"
#include "toporisk/kernels.hpp"

namespace toporisk {

std::size_t PersistenceDiagram::finite_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](auto& p) { return !p.is_essential(); }));
}

std::size_t PersistenceDiagram::essential_count() const noexcept {
  return points.size() - finite_count();
}

PersistenceDiagram PersistenceDiagram::canonical() const {
  PersistenceDiagram out = *this;
  // Essential points (no death) order before finite ones with the same birth.
  std::sort(out.points.begin(), out.points.end());
  return out;
}

Spectrum lifetimes(const PersistenceDiagram& diagram) {
  Spectrum s;
  for (const auto& p : diagram.points) {
    if (p.death) s.lifetimes.push_back(*p.death - p.birth);
  }
  return s;
}

Spectrum lifetimes(const std::vector<const PersistenceDiagram*>& diagrams) {
  Spectrum s;
  for (const auto* d : diagrams) {
    const auto part = lifetimes(*d);
    s.lifetimes.insert(s.lifetimes.end(), part.lifetimes.begin(), part.lifetimes.end());
  }
  return s;
}

double total_persistence(const Spectrum& spectrum) noexcept {
  return std::accumulate(spectrum.lifetimes.begin(), spectrum.lifetimes.end(), 0.0);
}

double persistence_entropy(const Spectrum& spectrum) noexcept {
  if (spectrum.lifetimes.size() < 2) return 0.0;
  const double total = total_persistence(spectrum);
  if (!(total > 0.0)) return 0.0;
  double h = 0.0;
  for (double l : spectrum.lifetimes) {
    const double p = l / total;
    if (p > 0.0) h -= p * std::log(p);
  }
  return std::max(h, 0.0);
}

double mean_lifetime(const Spectrum& spectrum) noexcept {
  if (spectrum.lifetimes.empty()) return 0.0;
  return total_persistence(spectrum) / static_cast<double>(spectrum.lifetimes.size());
}

namespace {

double directed_hausdorff_sq(const PointCloud& from, const std::vector<double>& to_cols,
                             std::size_t to_count) {
  const auto& k = kernels::active_kernels();
  const kernels::ColumnsView to{to_cols.data(), to_count, to_count, from.dim()};
  double worst = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    worst = std::max(worst, k.min_sq_distance(to, from.point(i).data()));
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const PointCloud& x, const PointCloud& y) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "clouds live in R^" + std::to_string(x.dim()) +
                                                  " and R^" + std::to_string(y.dim()));
  }
  const double xy = directed_hausdorff_sq(x, y.columns(), y.size());
  const double yx = directed_hausdorff_sq(y, x.columns(), x.size());
  return std::sqrt(std::max(xy, yx));
}

}  // namespace toporisk
