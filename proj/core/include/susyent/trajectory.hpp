#pragma once

#include <string>
#include <vector>

namespace susyent {

// One evolved grid point: time, the dimensionless g*t, entanglement entropy
// in nats, and the rung probabilities p_0 .. p_{(N-1)/2} of its parity ladder.
struct TrajectoryPoint {
  double t = 0.0;
  double gt = 0.0;
  double entropy = 0.0;
  std::vector<double> probabilities;
};

struct TrajectoryRecord {
  int total_photons = 0;
  int photons_in_b = 0;
  double g = 1.0;
  double omega = 0.0;
  std::string version;  // stamped into serialized output
  std::vector<TrajectoryPoint> points;
};

}  // namespace susyent
