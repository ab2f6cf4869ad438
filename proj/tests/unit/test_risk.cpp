#include <doctest.h>

#include <cmath>
#include <random>

#include "toporisk/error.hpp"
#include "toporisk/risk.hpp"

using namespace toporisk;

namespace {

// Returns whose sample standard deviation is exactly `sd` (up to rounding).
TimeSeries returns_with_sd(double sd, std::size_t n = 100) {
  TimeSeries r;
  r.kind = SeriesKind::LogReturn;
  for (std::size_t i = 0; i < n; ++i) r.values.push_back(i % 2 ? 1.0 : -1.0);
  // Alternating +-1 over even n: mean 0, sample variance n / (n - 1).
  const double scale = sd / std::sqrt(static_cast<double>(n) / static_cast<double>(n - 1));
  for (double& v : r.values) v *= scale;
  return r;
}

PersistenceDiagram square_h1() { return {1, {{1.0, std::sqrt(2.0)}}, 0}; }

}  // namespace

TEST_CASE("horizon_volatility") {
  RiskConfig cfg;
  cfg.periods_per_year = 365;
  cfg.horizon_days = 365;
  const auto r = returns_with_sd(0.02);
  CHECK(horizon_volatility(r, cfg) == doctest::Approx(0.382099463490856).epsilon(1e-12));
  cfg.horizon_days = 1;
  CHECK(horizon_volatility(r, cfg) == doctest::Approx(0.02).epsilon(1e-12));

  cfg.horizon_days = 10;
  const double base = horizon_volatility(r, cfg);
  cfg.horizon_days = 20;
  CHECK(horizon_volatility(r, cfg) == doctest::Approx(base * std::sqrt(2.0)).epsilon(1e-15));

  TimeSeries flat{{0.01, 0.01, 0.01}, std::nullopt, SeriesKind::LogReturn};
  CHECK_THROWS_AS(horizon_volatility(flat, cfg), Error);
  CHECK_THROWS_AS(horizon_volatility(TimeSeries{{1, 2, 3}}, cfg), Error);
}

TEST_CASE("complexity_risk_ratio") {
  CHECK(complexity_risk_ratio(0.0, 0.5) == 0.0);
  CHECK(complexity_risk_ratio(1.0, 0.25) == 4.0);
  CHECK(complexity_risk_ratio(869.87 * 0.1, 0.1) == doctest::Approx(869.87).epsilon(1e-15));
  try {
    complexity_risk_ratio(1.0, 0.0);
    FAIL("expected ZeroVolatility");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVolatility);
  }
}

TEST_CASE("leverage_multiplier") {
  CHECK(leverage_multiplier(869.87, 150) == 6);
  CHECK(leverage_multiplier(0.0, 150) == 1);
  CHECK(leverage_multiplier(0.0, 1) == 1);
  CHECK(leverage_multiplier(1e6, 150) == 150);
  // Half-way rounds away from zero.
  CHECK(leverage_multiplier(375.0, 150) == 3);
  CHECK(leverage_multiplier(374.999, 150) == 2);

  std::mt19937_64 rng(1);
  for (int l_max : {1, 2, 10, 150, 500}) {
    int previous = 1;
    for (int i = 0; i < 2000; ++i) {
      const double r = i * 0.37 * l_max;
      const int l = leverage_multiplier(r, l_max);
      CHECK(l >= previous);
      CHECK(l >= 1);
      CHECK(l <= l_max);
      previous = l;
    }
  }
}

TEST_CASE("classify_regime") {
  RiskConfig cfg;
  cfg.lambda_threshold = 1.0;
  CHECK(classify_regime(5.0, cfg) == Regime::StableAttractor);
  CHECK(classify_regime(0.0, cfg) == Regime::Stochastic);
  CHECK(classify_regime(1.0, cfg) == Regime::Stochastic);
}

TEST_CASE("significant_cycles") {
  CHECK(significant_cycles(square_h1(), 0.1) == 1);
  CHECK(significant_cycles(square_h1(), 0.3) == 0);
  const PersistenceDiagram d{1, {{0, 0.1}, {0.2, 0.25}, {0.3, 1.0}, {0.5, std::nullopt}}, 0};
  CHECK(significant_cycles(d, 0.0) == 3);
  std::size_t previous = 3;
  for (double delta = 0.0; delta < 0.5; delta += 0.01) {
    const auto c = significant_cycles(d, delta);
    CHECK(c <= previous);
    previous = c;
  }
}

TEST_CASE("assemble_report ties the fields together") {
  const std::vector<PersistenceDiagram> diagrams{
      {0, {{0, 1.0}, {0, 1.0}, {0, 1.0}, {0, std::nullopt}}, 0}, square_h1()};
  RiskConfig cfg;
  cfg.delta = 0.1;
  const auto r = assemble_report(diagrams, returns_with_sd(0.02), cfg);
  CHECK(r.lambda_total == doctest::Approx(std::sqrt(2.0) - 1.0));
  CHECK(r.r_sn == doctest::Approx(r.lambda_total / r.sigma_adj).epsilon(1e-12));
  CHECK(r.l_star == leverage_multiplier(r.r_sn, r.l_max));
  CHECK(r.regime == Regime::StableAttractor);
  CHECK(r.significant_cycles == std::optional<std::size_t>{1});
  REQUIRE(r.diagram_summary.size() == 2);
  CHECK(r.diagram_summary[0].finite_points == 3);
  CHECK(r.diagram_summary[0].essential_points == 1);
  CHECK(r.diagram_summary[1].top_lifetimes.size() == 1);

  cfg.include_h0 = true;
  const auto with_h0 = assemble_report(diagrams, returns_with_sd(0.02), cfg);
  CHECK(with_h0.lambda_total == doctest::Approx(3.0 + std::sqrt(2.0) - 1.0));

  cfg.include_h0 = false;
  cfg.lambda_threshold = 10.0;
  cfg.l_max = 2;
  auto big = diagrams;
  big[1].points = {{0.0, 5.0}};
  const auto forced = assemble_report(big, returns_with_sd(0.001), cfg);
  CHECK(forced.regime == Regime::Stochastic);
  CHECK(forced.l_star == 1);
}

TEST_CASE("summaries keep the five longest bars in descending order") {
  PersistenceDiagram d{1, {}, 0};
  for (int i = 1; i <= 9; ++i) d.points.push_back({0.0, 0.1 * i});
  const auto s = summarize(d);
  REQUIRE(s.top_lifetimes.size() == 5);
  CHECK(std::is_sorted(s.top_lifetimes.rbegin(), s.top_lifetimes.rend()));
  CHECK(s.top_lifetimes.front() == doctest::Approx(0.9));
}

TEST_CASE("RiskConfig validation") {
  RiskConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.l_max = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.periods_per_year = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.delta = -0.1;
  CHECK_THROWS_AS(cfg.validate(), Error);
}
