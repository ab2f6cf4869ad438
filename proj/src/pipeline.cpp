#include "toporisk/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "toporisk/error.hpp"
#include "toporisk/homology.hpp"

namespace toporisk {

namespace {

template <typename Fn>
auto in_stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

void PipelineConfig::validate() const {
  if (embedding.dimension == 0 || embedding.lag == 0) {
    throw Error(ErrorCode::InvalidConfig, "embedding dimension and lag must be >= 1");
  }
  if (max_dim > kMaxSimplexDim) {
    throw Error(ErrorCode::UnsupportedDimension,
                "max_dim must be <= " + std::to_string(kMaxSimplexDim));
  }
  if (epsilon_max && !(*epsilon_max > 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "epsilon_max must be > 0");
  }
  if (plot.snapshot_epsilon && !(*plot.snapshot_epsilon >= 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "snapshot epsilon must be >= 0");
  }
  if (plot.spectrum_bins == 0) throw Error(ErrorCode::InvalidConfig, "need >= 1 spectrum bin");
  risk.validate();
}

bool is_input_stage(std::string_view stage) noexcept {
  return stage == "config" || stage == "ingest";
}

DiagramComputation compute_diagrams(const PointCloud& cloud, std::size_t max_dim,
                                    std::optional<double> epsilon_max) {
  auto distances = in_stage("distances", [&] { return pairwise_distances(cloud); });
  const auto filtration = in_stage("filtration", [&] {
    return build_rips_filtration(distances, max_dim, epsilon_max);
  });
  const auto matrix = in_stage("boundary", [&] { return build_boundary_matrix(filtration); });
  const auto pairing = in_stage("reduction", [&] { return reduce(matrix); });
  // Top-dimensional classes are artifacts of truncating the complex.
  const std::size_t homology_dim = max_dim == 0 ? 0 : max_dim - 1;
  auto diagrams = in_stage("diagrams", [&] {
    return extract_diagrams(pairing, filtration, homology_dim);
  });
  return {std::move(distances), filtration.size(), std::move(diagrams)};
}

PipelineResult run_pipeline_text(std::string_view csv_text, const PipelineConfig& config) {
  in_stage("config", [&] { config.validate(); });
  auto prices = in_stage("ingest", [&] { return parse_price_csv(csv_text, config.csv); });
  auto returns = in_stage("returns", [&] { return log_returns(prices); });
  auto normalized = in_stage("normalize", [&] { return zscore_normalize(returns); });
  auto check = check_embedding_dim(config.embedding);
  auto cloud = in_stage("embedding", [&] { return delay_embed(normalized, config.embedding); });
  auto homology = compute_diagrams(cloud, config.max_dim, config.epsilon_max);

  std::vector<const PersistenceDiagram*> sources;
  for (const auto& d : homology.diagrams) {
    if (d.dim == 1 || (d.dim == 0 && config.risk.include_h0)) sources.push_back(&d);
  }
  auto spectrum = lifetimes(sources);
  auto report = in_stage("risk", [&] {
    return assemble_report(homology.diagrams, returns, config.risk);
  });

  return PipelineResult{std::move(prices),   std::move(returns), std::move(normalized),
                        std::move(check),    std::move(cloud),   std::move(homology),
                        std::move(spectrum), std::move(report)};
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  const auto text = in_stage("ingest", [&] { return read_file(config.input); });
  return run_pipeline_text(text, config);
}

}  // namespace toporisk
