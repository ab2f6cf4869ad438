// toporisk: price CSV in, topological risk report and plot data out.
//
// Exit codes: 0 success, 1 input or configuration error, 2 computation error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "toporisk/error.hpp"
#include "toporisk/kernels.hpp"
#include "toporisk/pipeline.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitCompute = 2;

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw toporisk::Error(toporisk::ErrorCode::Io, "cannot write " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace toporisk;

  PipelineConfig config;
  std::string input;
  std::string time_col;
  std::string epsilon_max = "full";
  std::size_t attractor_dim = 0;
  double delta = -1.0;
  std::string out_dir;
  std::string format = "json";
  double snapshot = -1.0;

  CLI::App app{"Topological risk report from a price series"};
  app.add_option("--input", input, "Price CSV (header row, comma separated)")->required();
  app.add_option("--price-col", config.csv.price_column, "Price column name")
      ->capture_default_str();
  app.add_option("--time-col", time_col, "Timestamp column name (epoch seconds)");
  app.add_option("--embed-dim", config.embedding.dimension, "Embedding dimension m")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--lag", config.embedding.lag, "Delay lag tau, in samples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--attractor-dim", attractor_dim,
                 "Assumed attractor dimension d; warns when m <= 2d");
  app.add_option("--max-dim", config.max_dim, "Largest simplex dimension (0-3)")
      ->capture_default_str()
      ->check(CLI::Range(0, 3));
  app.add_option("--epsilon-max", epsilon_max, "Rips truncation scale, or 'full'")
      ->capture_default_str();
  app.add_option("--periods-per-year", config.risk.periods_per_year,
                 "Samples per year of the input series")
      ->capture_default_str();
  app.add_option("--horizon-days", config.risk.horizon_days, "Investment horizon h in days")
      ->capture_default_str();
  app.add_option("--l-max", config.risk.l_max, "Exchange leverage cap")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000000));
  app.add_option("--delta", delta, "Noise scale; counts H1 bars longer than 2*delta");
  app.add_option("--lambda-threshold", config.risk.lambda_threshold,
                 "Total persistence at or below which the regime is stochastic")
      ->capture_default_str();
  app.add_flag("--include-h0", config.risk.include_h0,
               "Include finite H0 bars in lambda, entropy and mean lifetime");
  app.add_option("--out-dir", out_dir, "Directory for the report and plot-data files");
  app.add_option("--format", format, "Report format printed to stdout")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--snapshot-epsilon", snapshot,
                 "Scale for filtration_edges.csv (default: largest finite H0 death)");
  app.add_option("--spectrum-bins", config.plot.spectrum_bins, "Bins in spectrum.csv")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  config.input = input;
  if (!time_col.empty()) config.csv.timestamp_column = time_col;
  if (attractor_dim > 0) config.embedding.assumed_attractor_dim = attractor_dim;
  if (epsilon_max != "full") {
    try {
      config.epsilon_max = std::stod(epsilon_max);
    } catch (const std::exception&) {
      std::cerr << "error: --epsilon-max must be a number or 'full'\n";
      return kExitInput;
    }
  }
  if (app.count("--delta") > 0) config.risk.delta = delta;
  if (app.count("--snapshot-epsilon") > 0) config.plot.snapshot_epsilon = snapshot;
  if (!out_dir.empty()) config.out_dir = out_dir;
  config.format = format == "text" ? ReportFormat::Text : ReportFormat::Json;

  try {
    const auto result = run_pipeline(config);
    if (result.embedding_check.status == EmbeddingStatus::Warning) {
      std::cerr << "warning: " << result.embedding_check.message << "\n";
    }
    const auto report = emit_report(result.report, config.format);
    std::cout << report;
    if (config.out_dir) {
      emit_plot_data(result, config.plot, *config.out_dir);
      write_file(*config.out_dir / "report.json", emit_report(result.report, ReportFormat::Json));
      write_file(*config.out_dir / "report.txt", emit_report(result.report, ReportFormat::Text));
    }
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_stage(e.stage()) ? kExitInput : kExitCompute;
  } catch (const Error& e) {
    std::cerr << "error: stage 'output': " << e.what() << "\n";
    return e.code() == ErrorCode::Io ? kExitInput : kExitCompute;
  }
  return 0;
}
