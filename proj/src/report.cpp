#include <charconv>
#include <cstdio>
#include <cmath>
#include <json.hpp>
#include <sstream>

#include "toporisk/error.hpp"
#include "toporisk/pipeline.hpp"

namespace toporisk {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string out(buf, end);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

namespace {

std::string six_digits(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

ordered_json to_json(const RiskReport& r) {
  ordered_json j;
  j["lambda_total"] = r.lambda_total;
  j["entropy"] = r.entropy;
  j["mean_lifetime"] = r.mean_lifetime;
  j["sigma_adj"] = r.sigma_adj;
  j["r_sn"] = r.r_sn;
  j["l_star"] = r.l_star;
  j["l_max"] = r.l_max;
  j["regime"] = std::string(to_string(r.regime));
  j["significant_cycles"] =
      r.significant_cycles ? ordered_json(*r.significant_cycles) : ordered_json(nullptr);
  ordered_json summary = ordered_json::array();
  for (const auto& s : r.diagram_summary) {
    ordered_json e;
    e["dim"] = s.dim;
    e["finite_points"] = s.finite_points;
    e["essential_points"] = s.essential_points;
    e["top_lifetimes"] = s.top_lifetimes;
    summary.push_back(std::move(e));
  }
  j["diagram_summary"] = std::move(summary);
  return j;
}

std::string text_report(const RiskReport& r) {
  std::ostringstream o;
  o << "Topological risk report\n";
  o << "  total persistence (lambda): " << six_digits(r.lambda_total) << "\n";
  o << "  persistence entropy:        " << six_digits(r.entropy)
    << "  (Shannon entropy of lifetimes normalized by lambda, natural log)\n";
  o << "  mean lifetime:              " << six_digits(r.mean_lifetime) << "\n";
  o << "  horizon volatility (sigma): " << six_digits(r.sigma_adj) << "\n";
  o << "  complexity-risk ratio R_SN: " << six_digits(r.r_sn) << "\n";
  o << "  regime:                     " << to_string(r.regime) << "\n";
  o << "  suggested leverage:         " << r.l_star << "x (cap " << r.l_max << "x)\n";
  o << "  cycles > 2*delta:           "
    << (r.significant_cycles ? std::to_string(*r.significant_cycles) : std::string("n/a"))
    << "\n";
  for (const auto& s : r.diagram_summary) {
    o << "  H" << s.dim << ": " << s.finite_points << " finite, " << s.essential_points
      << " essential; top lifetimes:";
    if (s.top_lifetimes.empty()) o << " none";
    for (double l : s.top_lifetimes) o << " " << six_digits(l);
    o << "\n";
  }
  return o.str();
}

template <typename T>
T field(const ordered_json& j, const char* key) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::InvalidConfig, std::string("report is missing '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("bad '") + key + "': " + e.what());
  }
}

}  // namespace

std::string emit_report(const RiskReport& report, ReportFormat format) {
  if (format == ReportFormat::Text) return text_report(report);
  return to_json(report).dump(2) + "\n";
}

RiskReport parse_report_json(std::string_view json) {
  ordered_json j;
  try {
    j = ordered_json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidConfig, std::string("report is not JSON: ") + e.what());
  }
  RiskReport r;
  r.lambda_total = field<double>(j, "lambda_total");
  r.entropy = field<double>(j, "entropy");
  r.mean_lifetime = field<double>(j, "mean_lifetime");
  r.sigma_adj = field<double>(j, "sigma_adj");
  r.r_sn = field<double>(j, "r_sn");
  r.l_star = field<int>(j, "l_star");
  r.l_max = field<int>(j, "l_max");
  const auto regime = parse_regime(field<std::string>(j, "regime"));
  if (!regime) throw Error(ErrorCode::InvalidConfig, "unknown regime");
  r.regime = *regime;
  const auto& sig = j.at("significant_cycles");
  if (!sig.is_null()) r.significant_cycles = sig.get<std::size_t>();
  for (const auto& e : field<ordered_json>(j, "diagram_summary")) {
    DiagramSummary s;
    s.dim = field<std::size_t>(e, "dim");
    s.finite_points = field<std::size_t>(e, "finite_points");
    s.essential_points = field<std::size_t>(e, "essential_points");
    s.top_lifetimes = field<std::vector<double>>(e, "top_lifetimes");
    r.diagram_summary.push_back(std::move(s));
  }
  return r;
}

std::string diagrams_to_json(const std::vector<PersistenceDiagram>& diagrams) {
  ordered_json out = ordered_json::array();
  for (const auto& d : diagrams) {
    for (const auto& p : d.canonical().points) {
      ordered_json e;
      e["dim"] = d.dim;
      e["birth"] = p.birth;
      e["death"] = p.death ? ordered_json(*p.death) : ordered_json("inf");
      out.push_back(std::move(e));
    }
  }
  return out.dump(2) + "\n";
}

}  // namespace toporisk
