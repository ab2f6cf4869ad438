#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toporisk/diagram.hpp"
#include "toporisk/embedding.hpp"
#include "toporisk/ingest.hpp"
#include "toporisk/rips.hpp"
#include "toporisk/risk.hpp"

namespace toporisk {

enum class ReportFormat { Json, Text };

struct PlotOptions {
  /// Scale for filtration_edges.csv; defaults to the largest finite H0 death.
  std::optional<double> snapshot_epsilon;
  std::size_t spectrum_bins = 20;
};

struct PipelineConfig {
  std::filesystem::path input;
  CsvConfig csv;
  EmbeddingConfig embedding;
  std::size_t max_dim = 2;
  std::optional<double> epsilon_max;
  RiskConfig risk;
  std::optional<std::filesystem::path> out_dir;
  ReportFormat format = ReportFormat::Json;
  PlotOptions plot;

  /// Throws InvalidConfig; the pipeline reports it as the "config" stage.
  void validate() const;
};

/// Distances, filtration size and diagrams for dimensions 0..max_dim-1.
struct DiagramComputation {
  DistanceMatrix distances;
  std::size_t simplex_count = 0;
  std::vector<PersistenceDiagram> diagrams;
};

DiagramComputation compute_diagrams(const PointCloud& cloud, std::size_t max_dim,
                                    std::optional<double> epsilon_max = std::nullopt);

struct PipelineResult {
  TimeSeries prices;
  TimeSeries returns;
  TimeSeries normalized;
  EmbeddingCheck embedding_check;
  PointCloud cloud;
  DiagramComputation homology;
  Spectrum spectrum;  // the lifetimes behind lambda_total
  RiskReport report;
};

/// Reads `config.input` and runs every stage. Failures surface as
/// StageError naming the stage.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Same as run_pipeline on in-memory CSV text; `config.input` is ignored.
PipelineResult run_pipeline_text(std::string_view csv_text, const PipelineConfig& config);

/// Whether a stage failure is an input/config problem rather than a
/// computation problem.
bool is_input_stage(std::string_view stage) noexcept;

std::string emit_report(const RiskReport& report, ReportFormat format);
/// Inverse of emit_report(.., Json). Throws InvalidConfig on schema errors.
RiskReport parse_report_json(std::string_view json);

/// JSON array of {dim, birth, death}; essential deaths are the string "inf".
std::string diagrams_to_json(const std::vector<PersistenceDiagram>& diagrams);

/// Writes returns.csv, phase_space.csv, filtration_edges.csv, spectrum.csv,
/// diagram.csv, diagram.json and risk.csv. Returns the paths written.
std::vector<std::filesystem::path> emit_plot_data(const PipelineResult& result,
                                                  const PlotOptions& options,
                                                  const std::filesystem::path& out_dir);

/// Shortest round-trip decimal form; integral values keep a ".0".
std::string format_number(double value);

}  // namespace toporisk
