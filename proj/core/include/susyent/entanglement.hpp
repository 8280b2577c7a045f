#pragma once

// Entanglement of the evolved two-mode states.  Every rung of a parity
// ladder is a distinct product state |n1>_A |n2>_B, so the ladder expansion
// is already a Schmidt decomposition and the Schmidt probabilities are
// simply |a_n|^2.  Entropy is reported in nats.

#include <optional>
#include <vector>

#include "susyent/dynamics.hpp"
#include "susyent/hamiltonian.hpp"
#include "susyent/trajectory.hpp"

namespace susyent {

struct SchmidtProfile {
  std::vector<double> probabilities;  // ladder order
  double entropy = 0.0;               // nats
};

// -sum p ln p with 0*ln(0) := 0; probabilities below 1e-15 count as exact
// zeros.  Compensated summation keeps the ln(2) gap identity good to 1e-14.
double von_neumann_entropy(const std::vector<double>& probabilities);
double von_neumann_entropy(const SchmidtProfile& profile);

SchmidtProfile schmidt_profile(const EvolvedState& state);

// Uniform amplitudes over the full ladder (N+1 rungs, entropy ln(N+1)) or,
// when a mode-B parity is given, over that parity ladder ((N+1)/2 rungs for
// odd N, entropy ln((N+1)/2)).  The two maxima differ by exactly ln 2.
std::vector<double> max_entangled_state(int total_photons,
                                        std::optional<int> l_parity = std::nullopt);

// Entropy and rung probabilities of |N-L, L> evolved across a strictly
// increasing time grid.
TrajectoryRecord entropy_trajectory(const ProductStateSpec& spec, const HamiltonianParams& params,
                                    const std::vector<double>& grid);

}  // namespace susyent
