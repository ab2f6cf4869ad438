#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "toporisk/diagram.hpp"
#include "toporisk/ingest.hpp"

namespace toporisk {

struct RiskConfig {
  double periods_per_year = 365.0;
  double horizon_days = 30.0;
  int l_max = 150;
  /// Noise scale; enables the significant-cycle count when set.
  std::optional<double> delta;
  /// Total persistence at or below this is the stochastic regime.
  double lambda_threshold = 0.0;
  /// Add finite H0 bars to the spectrum behind lambda, entropy and mean.
  bool include_h0 = false;

  /// Throws InvalidConfig when a field is out of range.
  void validate() const;
};

enum class Regime { StableAttractor, Stochastic };

std::string_view to_string(Regime regime) noexcept;
std::optional<Regime> parse_regime(std::string_view text) noexcept;

struct DiagramSummary {
  std::size_t dim = 0;
  std::size_t finite_points = 0;
  std::size_t essential_points = 0;
  /// Up to five largest lifetimes, descending.
  std::vector<double> top_lifetimes;

  bool operator==(const DiagramSummary&) const = default;
};

struct RiskReport {
  double lambda_total = 0.0;
  double entropy = 0.0;
  double mean_lifetime = 0.0;
  double sigma_adj = 0.0;
  double r_sn = 0.0;
  int l_star = 1;
  int l_max = 150;
  Regime regime = Regime::Stochastic;
  std::optional<std::size_t> significant_cycles;
  std::vector<DiagramSummary> diagram_summary;

  bool operator==(const RiskReport&) const = default;
};

/// stddev(returns) * sqrt(periods_per_year) * sqrt(horizon_days / 365),
/// using the sample (N-1) standard deviation.
double horizon_volatility(const TimeSeries& returns, const RiskConfig& config);

/// lambda_total / sigma_adj.
double complexity_risk_ratio(double lambda_total, double sigma_adj);

/// clamp(round(r_sn / l_max), 1, l_max), rounding half away from zero.
int leverage_multiplier(double r_sn, int l_max);

Regime classify_regime(double lambda_total, const RiskConfig& config) noexcept;

/// Finite points whose persistence exceeds 2 * delta.
std::size_t significant_cycles(const PersistenceDiagram& diagram, double delta);

DiagramSummary summarize(const PersistenceDiagram& diagram);

/// Assembles the report from the diagrams (indexed by dimension) and the
/// raw log-returns. A stochastic regime forces l_star to 1.
RiskReport assemble_report(const std::vector<PersistenceDiagram>& diagrams,
                           const TimeSeries& returns, const RiskConfig& config);

}  // namespace toporisk
