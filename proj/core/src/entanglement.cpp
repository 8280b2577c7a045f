#include "susyent/entanglement.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include "susyent/spectrum.hpp"
#include "susyent/version.hpp"

namespace susyent {

namespace {
constexpr double kZeroProbability = 1e-15;
}

double von_neumann_entropy(const std::vector<double>& probabilities) {
  // Kahan-Babuska-Neumaier compensated accumulation.
  double sum = 0.0;
  double comp = 0.0;
  for (const double p : probabilities) {
    if (p < -1e-12) throw std::invalid_argument("negative Schmidt probability");
    if (p < kZeroProbability) continue;
    const double term = -p * std::log(p);
    const double next = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - next) + term;
    else
      comp += (term - next) + sum;
    sum = next;
  }
  return sum + comp;
}

double von_neumann_entropy(const SchmidtProfile& profile) {
  return von_neumann_entropy(profile.probabilities);
}

SchmidtProfile schmidt_profile(const EvolvedState& state) {
  SchmidtProfile profile;
  profile.probabilities.reserve(state.amplitudes.size());
  for (const std::complex<double>& a : state.amplitudes)
    profile.probabilities.push_back(std::norm(a));
  profile.entropy = von_neumann_entropy(profile.probabilities);
  return profile;
}

std::vector<double> max_entangled_state(int total_photons, std::optional<int> l_parity) {
  if (total_photons < 1) throw std::invalid_argument("total photon number must be positive");
  std::size_t rungs = 0;
  if (l_parity.has_value()) {
    if (*l_parity != 0 && *l_parity != 1)
      throw std::invalid_argument("mode-B parity must be 0 or 1");
    if (total_photons % 2 == 0)
      throw std::invalid_argument("parity-resolved maximal state requires an odd photon number");
    rungs = static_cast<std::size_t>((total_photons + 1) / 2);
  } else {
    rungs = static_cast<std::size_t>(total_photons + 1);
  }
  return std::vector<double>(rungs, 1.0 / std::sqrt(static_cast<double>(rungs)));
}

TrajectoryRecord entropy_trajectory(const ProductStateSpec& spec, const HamiltonianParams& params,
                                    const std::vector<double>& grid) {
  validate(spec);
  validate(params);
  if (spec.total_photons != params.total_photons)
    throw std::invalid_argument("photon numbers of state and parameters disagree");
  if (grid.empty()) throw std::invalid_argument("time grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw std::invalid_argument("time grid must be strictly increasing");

  const SpectralDecomposition decomp = assemble_spectrum(params);

  TrajectoryRecord record;
  record.total_photons = spec.total_photons;
  record.photons_in_b = spec.photons_in_b;
  record.g = params.g;
  record.omega = params.omega;
  record.version = kVersion;
  record.points.reserve(grid.size());
  for (const double t : grid) {
    const EvolvedState state = evolve(spec, decomp, params, t);
    SchmidtProfile profile = schmidt_profile(state);
    TrajectoryPoint point;
    point.t = t;
    point.gt = params.g * t;
    point.entropy = profile.entropy;
    point.probabilities = std::move(profile.probabilities);
    record.points.push_back(std::move(point));
  }
  return record;
}

}  // namespace susyent
