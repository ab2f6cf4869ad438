#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toporisk/embedding.hpp"

namespace toporisk {

/// A (birth, death) point. An absent death marks an essential class.
struct DiagramPoint {
  double birth = 0.0;
  std::optional<double> death;

  bool is_essential() const noexcept { return !death.has_value(); }
  auto operator<=>(const DiagramPoint&) const = default;
};

struct PersistenceDiagram {
  std::size_t dim = 0;
  std::vector<DiagramPoint> points;
  /// Pairs with birth == death that were not stored in `points`.
  std::size_t zero_persistence_dropped = 0;

  std::size_t finite_count() const noexcept;
  std::size_t essential_count() const noexcept;
  /// Points sorted ascending, for multiset comparison.
  PersistenceDiagram canonical() const;

  bool operator==(const PersistenceDiagram&) const = default;
};

/// Lifetimes death - birth of the finite points.
struct Spectrum {
  std::vector<double> lifetimes;
};

Spectrum lifetimes(const PersistenceDiagram& diagram);
/// Concatenation of the spectra of several diagrams.
Spectrum lifetimes(const std::vector<const PersistenceDiagram*>& diagrams);

/// L1 norm of the spectrum; 0 when empty.
double total_persistence(const Spectrum& spectrum) noexcept;

/// Shannon entropy (natural log) of lifetimes normalised by their sum.
/// 0 for an empty or single-element spectrum.
double persistence_entropy(const Spectrum& spectrum) noexcept;

double mean_lifetime(const Spectrum& spectrum) noexcept;

/// Exact bottleneck distance under the L-infinity ground metric, with the
/// diagonal available to every point. Infinite when the essential counts
/// differ. Throws DimensionMismatch for diagrams of different dimension.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Symmetric Hausdorff distance under the Euclidean metric.
double hausdorff_distance(const PointCloud& x, const PointCloud& y);

}  // namespace toporisk
