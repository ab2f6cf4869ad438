#include <algorithm>
#include <fstream>
#include <sstream>

#include "toporisk/error.hpp"
#include "toporisk/pipeline.hpp"

namespace toporisk {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content) || !out.flush()) {
    throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  }
}

double default_snapshot(const std::vector<PersistenceDiagram>& diagrams) {
  double eps = 0.0;
  for (const auto& d : diagrams) {
    if (d.dim != 0) continue;
    for (const auto& p : d.points)
      if (p.death) eps = std::max(eps, *p.death);
  }
  return eps;
}

std::string returns_csv(const TimeSeries& returns) {
  std::ostringstream o;
  o << "t,r_t\n";
  for (std::size_t t = 0; t < returns.size(); ++t) {
    if (returns.timestamps) {
      o << (*returns.timestamps)[t];
    } else {
      o << t;
    }
    o << ',' << format_number(returns.values[t]) << '\n';
  }
  return o.str();
}

std::string phase_space_csv(const PointCloud& cloud) {
  static constexpr const char* names[] = {"x", "y", "z"};
  const std::size_t cols = std::min<std::size_t>(3, cloud.dim());
  std::ostringstream o;
  for (std::size_t k = 0; k < cols; ++k) o << (k ? "," : "") << names[k];
  o << '\n';
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t k = 0; k < cols; ++k) o << (k ? "," : "") << format_number(cloud(i, k));
    o << '\n';
  }
  return o.str();
}

std::string edges_csv(const DistanceMatrix& dist, double snapshot) {
  std::ostringstream o;
  o << "i,j,epsilon\n";
  for (std::size_t i = 0; i < dist.size(); ++i)
    for (std::size_t j = i + 1; j < dist.size(); ++j)
      if (dist(i, j) <= snapshot) o << i << ',' << j << ',' << format_number(dist(i, j)) << '\n';
  return o.str();
}

std::string spectrum_csv(const Spectrum& spectrum, std::size_t bins) {
  std::ostringstream o;
  o << "bin_start,bin_end,count\n";
  if (spectrum.lifetimes.empty()) return o.str();
  const double top = *std::max_element(spectrum.lifetimes.begin(), spectrum.lifetimes.end());
  const double width = top / static_cast<double>(bins);
  std::vector<std::size_t> counts(bins, 0);
  for (double l : spectrum.lifetimes) {
    auto b = static_cast<std::size_t>(l / width);
    ++counts[std::min(b, bins - 1)];
  }
  for (std::size_t b = 0; b < bins; ++b) {
    const double hi = b + 1 == bins ? top : width * static_cast<double>(b + 1);
    o << format_number(width * static_cast<double>(b)) << ',' << format_number(hi) << ','
      << counts[b] << '\n';
  }
  return o.str();
}

std::string diagram_csv(const std::vector<PersistenceDiagram>& diagrams) {
  std::ostringstream o;
  o << "dim,birth,death\n";
  for (const auto& d : diagrams) {
    for (const auto& p : d.canonical().points) {
      o << d.dim << ',' << format_number(p.birth) << ','
        << (p.death ? format_number(*p.death) : std::string("inf")) << '\n';
    }
  }
  return o.str();
}

std::string risk_csv(const RiskReport& r) {
  std::ostringstream o;
  o << "lambda,sigma_adj,r_sn\n";
  o << format_number(r.lambda_total) << ',' << format_number(r.sigma_adj) << ','
    << format_number(r.r_sn) << '\n';
  return o.str();
}

}  // namespace

std::vector<std::filesystem::path> emit_plot_data(const PipelineResult& result,
                                                  const PlotOptions& options,
                                                  const std::filesystem::path& out_dir) {
  if (options.spectrum_bins == 0) throw Error(ErrorCode::InvalidConfig, "need >= 1 bin");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create '" + out_dir.string() + "': " + ec.message());

  const auto& diagrams = result.homology.diagrams;
  const double snapshot = options.snapshot_epsilon.value_or(default_snapshot(diagrams));
  const std::pair<const char*, std::string> files[] = {
      {"returns.csv", returns_csv(result.returns)},
      {"phase_space.csv", phase_space_csv(result.cloud)},
      {"filtration_edges.csv", edges_csv(result.homology.distances, snapshot)},
      {"spectrum.csv", spectrum_csv(result.spectrum, options.spectrum_bins)},
      {"diagram.csv", diagram_csv(diagrams)},
      {"diagram.json", diagrams_to_json(diagrams)},
      {"risk.csv", risk_csv(result.report)},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [name, content] : files) {
    written.push_back(out_dir / name);
    write_file(written.back(), content);
  }
  return written;
}

}  // namespace toporisk
