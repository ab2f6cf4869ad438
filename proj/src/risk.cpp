#include "toporisk/risk.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "toporisk/error.hpp"

namespace toporisk {

void RiskConfig::validate() const {
  if (!(periods_per_year > 0.0) || !std::isfinite(periods_per_year)) {
    throw Error(ErrorCode::InvalidConfig, "periods_per_year must be > 0");
  }
  if (!(horizon_days > 0.0) || !std::isfinite(horizon_days)) {
    throw Error(ErrorCode::InvalidConfig, "horizon_days must be > 0");
  }
  if (l_max < 1) throw Error(ErrorCode::InvalidConfig, "l_max must be >= 1");
  if (delta && !(*delta >= 0.0)) throw Error(ErrorCode::InvalidConfig, "delta must be >= 0");
  if (!(lambda_threshold >= 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "lambda_threshold must be >= 0");
  }
}

std::string_view to_string(Regime regime) noexcept {
  return regime == Regime::StableAttractor ? "StableAttractor" : "Stochastic";
}

std::optional<Regime> parse_regime(std::string_view text) noexcept {
  if (text == "StableAttractor") return Regime::StableAttractor;
  if (text == "Stochastic") return Regime::Stochastic;
  return std::nullopt;
}

double horizon_volatility(const TimeSeries& returns, const RiskConfig& config) {
  if (returns.kind != SeriesKind::LogReturn) {
    throw Error(ErrorCode::WrongKind, "horizon volatility needs a LogReturn series");
  }
  if (returns.size() < 2) throw Error(ErrorCode::TooShort, "need at least two returns");
  config.validate();
  const auto& x = returns.values;
  if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); })) {
    throw Error(ErrorCode::ZeroVariance, "constant returns have no volatility");
  }
  const double n = static_cast<double>(x.size());
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double stddev = std::sqrt(ss / (n - 1.0));
  if (!(stddev > 0.0)) throw Error(ErrorCode::ZeroVariance, "volatility underflows to zero");
  return stddev * std::sqrt(config.periods_per_year) *
         std::sqrt(config.horizon_days / 365.0);
}

double complexity_risk_ratio(double lambda_total, double sigma_adj) {
  if (!(sigma_adj > 0.0)) {
    throw Error(ErrorCode::ZeroVolatility, "adjusted volatility must be > 0");
  }
  return lambda_total / sigma_adj;
}

int leverage_multiplier(double r_sn, int l_max) {
  if (l_max < 1) throw Error(ErrorCode::InvalidConfig, "l_max must be >= 1");
  if (!(r_sn >= 0.0)) return 1;
  // std::round rounds halfway cases away from zero.
  const double scaled = std::round(r_sn / static_cast<double>(l_max));
  return static_cast<int>(std::clamp(scaled, 1.0, static_cast<double>(l_max)));
}

Regime classify_regime(double lambda_total, const RiskConfig& config) noexcept {
  return lambda_total > config.lambda_threshold ? Regime::StableAttractor
                                                : Regime::Stochastic;
}

std::size_t significant_cycles(const PersistenceDiagram& diagram, double delta) {
  if (!(delta >= 0.0)) throw Error(ErrorCode::InvalidConfig, "delta must be >= 0");
  std::size_t count = 0;
  for (const auto& p : diagram.points) {
    if (p.death && *p.death - p.birth > 2.0 * delta) ++count;
  }
  return count;
}

DiagramSummary summarize(const PersistenceDiagram& diagram) {
  DiagramSummary s;
  s.dim = diagram.dim;
  s.finite_points = diagram.finite_count();
  s.essential_points = diagram.essential_count();
  auto spectrum = lifetimes(diagram).lifetimes;
  const std::size_t keep = std::min<std::size_t>(5, spectrum.size());
  std::partial_sort(spectrum.begin(), spectrum.begin() + keep, spectrum.end(),
                    std::greater<>());
  s.top_lifetimes.assign(spectrum.begin(), spectrum.begin() + keep);
  return s;
}

RiskReport assemble_report(const std::vector<PersistenceDiagram>& diagrams,
                           const TimeSeries& returns, const RiskConfig& config) {
  config.validate();
  std::vector<const PersistenceDiagram*> sources;
  const PersistenceDiagram* h1 = nullptr;
  for (const auto& d : diagrams) {
    if (d.dim == 1) h1 = &d;
    if (d.dim == 1 || (d.dim == 0 && config.include_h0)) sources.push_back(&d);
  }
  const Spectrum spectrum = lifetimes(sources);

  RiskReport r;
  r.lambda_total = total_persistence(spectrum);
  r.entropy = persistence_entropy(spectrum);
  r.mean_lifetime = mean_lifetime(spectrum);
  r.sigma_adj = horizon_volatility(returns, config);
  r.r_sn = complexity_risk_ratio(r.lambda_total, r.sigma_adj);
  r.l_max = config.l_max;
  r.regime = classify_regime(r.lambda_total, config);
  r.l_star = r.regime == Regime::Stochastic ? 1 : leverage_multiplier(r.r_sn, r.l_max);
  if (config.delta) {
    r.significant_cycles = h1 ? significant_cycles(*h1, *config.delta) : 0;
  }
  for (const auto& d : diagrams) r.diagram_summary.push_back(summarize(d));
  return r;
}

}  // namespace toporisk
