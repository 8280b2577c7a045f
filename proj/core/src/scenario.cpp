#include "susyent/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <system_error>

#include "susyent/dynamics.hpp"
#include "susyent/entanglement.hpp"
#include "susyent/errors.hpp"
#include "susyent/hamiltonian.hpp"
#include "susyent/oracle.hpp"

namespace susyent {

namespace {

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view token, const char* what) {
  double out = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw std::invalid_argument(std::string("malformed ") + what + " value '" +
                                std::string(token) + "'");
  return out;
}

int parse_int(std::string_view token, const char* what) {
  int out = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw std::invalid_argument(std::string("malformed ") + what + " value '" +
                                std::string(token) + "'");
  return out;
}

std::string_view value_of(std::string_view token, std::string_view key, const char* what) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key)
    throw std::invalid_argument(std::string("metadata line is missing ") + what);
  return token.substr(key.size());
}

}  // namespace

void validate(const ScenarioConfig& config) {
  if (config.total_photons < 1)
    throw std::invalid_argument("total photon number must be positive");
  if (config.photons_in_b < 0 || config.photons_in_b > config.total_photons)
    throw std::invalid_argument("photons in mode B must lie in [0, total]");
  if (config.steps < 2) throw std::invalid_argument("grid needs at least two points");
  if (!(config.t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (!(config.survival_epsilon > 0.0))
    throw std::invalid_argument("survival epsilon must be positive");
}

TrajectoryRecord run_scenario(const ScenarioConfig& config) {
  validate(config);
  const ProductStateSpec spec{config.total_photons, config.photons_in_b};
  HamiltonianParams params;
  params.omega = config.omega;
  params.g = config.g;
  params.total_photons = config.total_photons;

  std::vector<double> grid(static_cast<std::size_t>(config.steps));
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = config.t_max * (static_cast<double>(i) / (config.steps - 1));

  TrajectoryRecord record = entropy_trajectory(spec, params, grid);

  if (config.oracle) {
    for (const TrajectoryPoint& point : record.points) {
      const auto state = oracle_evolve(spec, params, point.t);
      const double slow = oracle_entropy(state, config.total_photons);
      if (std::abs(slow - point.entropy) > 1e-8)
        throw ConsistencyError("fast and slow entropies disagree at t=" + format_double(point.t) +
                               ": " + format_double(point.entropy) + " vs " +
                               format_double(slow));
    }
  }
  return record;
}

PeakSummary report_peaks(const TrajectoryRecord& record, double epsilon) {
  if (record.points.empty()) throw std::invalid_argument("record has no rows");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  std::size_t peak = 0;
  for (std::size_t i = 1; i < record.points.size(); ++i)
    if (record.points[i].entropy > record.points[peak].entropy) peak = i;

  const double threshold = record.points[peak].entropy - epsilon;
  std::size_t lo = peak;
  while (lo > 0 && record.points[lo - 1].entropy >= threshold) --lo;
  std::size_t hi = peak;
  while (hi + 1 < record.points.size() && record.points[hi + 1].entropy >= threshold) ++hi;

  PeakSummary summary;
  summary.peak_value = record.points[peak].entropy;
  summary.peak_time = record.points[peak].t;
  summary.survival_time = record.points[hi].t - record.points[lo].t;
  return summary;
}

std::string to_csv(const TrajectoryRecord& record) {
  std::string out;
  out += "# susy-entangle v";
  out += record.version;
  out += " N=" + std::to_string(record.total_photons);
  out += " L=" + std::to_string(record.photons_in_b);
  out += " g=" + format_double(record.g);
  out += " omega=" + format_double(record.omega);
  out += '\n';
  out += "t,gt,entropy";
  const std::size_t probs =
      record.points.empty() ? 0 : record.points.front().probabilities.size();
  for (std::size_t i = 0; i < probs; ++i) out += ",p" + std::to_string(i);
  out += '\n';
  for (const TrajectoryPoint& point : record.points) {
    out += format_double(point.t);
    out += ',';
    out += format_double(point.gt);
    out += ',';
    out += format_double(point.entropy);
    for (const double p : point.probabilities) {
      out += ',';
      out += format_double(p);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const TrajectoryRecord& record, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  const std::string body = to_csv(record);
  file.write(body.data(), static_cast<std::streamsize>(body.size()));
  file.flush();
  if (!file) throw IoError("write failed for '" + path + "'");
}

TrajectoryRecord parse_csv(const std::string& text) {
  std::size_t pos = 0;
  const auto next_line = [&]() -> std::optional<std::string_view> {
    if (pos >= text.size()) return std::nullopt;
    const std::size_t end = std::string_view(text).find('\n', pos);
    const std::string_view line = end == std::string_view::npos
                                      ? std::string_view(text).substr(pos)
                                      : std::string_view(text).substr(pos, end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    return line;
  };
  const auto split = [](std::string_view line, char sep) {
    std::vector<std::string_view> tokens;
    std::size_t begin = 0;
    while (begin <= line.size()) {
      const std::size_t end = line.find(sep, begin);
      if (end == std::string_view::npos) {
        tokens.push_back(line.substr(begin));
        break;
      }
      tokens.push_back(line.substr(begin, end - begin));
      begin = end + 1;
    }
    return tokens;
  };

  const auto metadata = next_line();
  if (!metadata) throw std::invalid_argument("record text is empty");
  const auto meta_tokens = split(*metadata, ' ');
  if (meta_tokens.size() != 7 || meta_tokens[0] != "#" || meta_tokens[1] != "susy-entangle" ||
      meta_tokens[2].empty() || meta_tokens[2][0] != 'v')
    throw std::invalid_argument("unrecognized metadata line");

  TrajectoryRecord record;
  record.version = std::string(meta_tokens[2].substr(1));
  record.total_photons = parse_int(value_of(meta_tokens[3], "N=", "N"), "N");
  record.photons_in_b = parse_int(value_of(meta_tokens[4], "L=", "L"), "L");
  record.g = parse_double(value_of(meta_tokens[5], "g=", "g"), "g");
  record.omega = parse_double(value_of(meta_tokens[6], "omega=", "omega"), "omega");

  const auto header = next_line();
  if (!header || header->substr(0, 12) != "t,gt,entropy")
    throw std::invalid_argument("missing column header");
  const std::size_t columns = split(*header, ',').size();

  while (const auto line = next_line()) {
    if (line->empty()) continue;
    const auto cells = split(*line, ',');
    if (cells.size() != columns) throw std::invalid_argument("row width does not match header");
    TrajectoryPoint point;
    point.t = parse_double(cells[0], "t");
    point.gt = parse_double(cells[1], "gt");
    point.entropy = parse_double(cells[2], "entropy");
    point.probabilities.reserve(columns - 3);
    for (std::size_t i = 3; i < columns; ++i)
      point.probabilities.push_back(parse_double(cells[i], "probability"));
    record.points.push_back(std::move(point));
  }
  return record;
}

std::vector<std::pair<std::string, ScenarioConfig>> paper_figure_scenarios() {
  std::vector<std::pair<std::string, ScenarioConfig>> out;
  const auto add = [&](std::string name, int n, int l, double t_max) {
    ScenarioConfig config;
    config.total_photons = n;
    config.photons_in_b = l;
    config.t_max = t_max;  // g = 1, so the gt window equals the t window
    out.emplace_back(std::move(name), config);
  };
  for (const int l : {0, 1, 2}) {
    add("fig1_N5_L" + std::to_string(l) + "_short.csv", 5, l, 2.0);
    add("fig1_N5_L" + std::to_string(l) + "_long.csv", 5, l, 22.015);
  }
  for (const int l : {0, 1, 3, 4}) add("fig2_N9_L" + std::to_string(l) + ".csv", 9, l, 2.0);
  return out;
}

}  // namespace susyent
