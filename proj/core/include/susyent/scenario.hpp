#pragma once

// Scenario runner behind the command-line tool: builds entropy trajectories
// on a uniform time grid, summarizes peaks and survival times, and
// serializes records as deterministic CSV.

#include <string>
#include <utility>
#include <vector>

#include "susyent/trajectory.hpp"

namespace susyent {

struct ScenarioConfig {
  int total_photons = 1;
  int photons_in_b = 0;
  double omega = 0.0;
  double g = 1.0;
  double t_max = 2.0;
  int steps = 2001;
  double survival_epsilon = 0.05;  // nats
  std::string output_path;
  bool oracle = false;  // cross-check every grid point against the slow path
};

void validate(const ScenarioConfig& config);

// Evolves |N-L, L> on the uniform grid t_i = t_max * i/(steps-1).  With the
// oracle flag set, every grid entropy is re-derived through the dense slow
// path; a deviation above 1e-8 throws ConsistencyError.  Pure: writing the
// record to config.output_path is the caller's job (see emit_csv).
TrajectoryRecord run_scenario(const ScenarioConfig& config);

struct PeakSummary {
  double peak_value = 0.0;     // max entropy on the grid
  double peak_time = 0.0;      // t of the first maximum
  double survival_time = 0.0;  // length of the contiguous run with E >= peak - epsilon
};

// Survival time is measured over the maximal contiguous grid run containing
// the first peak on which entropy stays within epsilon of the peak; for a
// constant record that is the whole window.
PeakSummary report_peaks(const TrajectoryRecord& record, double epsilon);

// CSV layout: one metadata line "# susy-entangle v<version> N=.. L=.. g=..
// omega=..", one column header "t,gt,entropy,p0,...", then one row per grid
// point.  Floats use the shortest round-trip form, newline is '\n'.
std::string to_csv(const TrajectoryRecord& record);
void emit_csv(const TrajectoryRecord& record, const std::string& path);
TrajectoryRecord parse_csv(const std::string& text);

// Named configurations reproducing the published curve sets: the N=5 family
// over the short and long windows and the N=9 family on the default window.
std::vector<std::pair<std::string, ScenarioConfig>> paper_figure_scenarios();

}  // namespace susyent
