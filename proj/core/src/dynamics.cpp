#include "susyent/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace susyent {

void validate(const ProductStateSpec& spec) {
  if (spec.total_photons < 1) throw std::invalid_argument("total photon number must be positive");
  if (spec.total_photons % 2 == 0)
    throw std::invalid_argument("ladder dynamics requires an odd total photon number");
  if (spec.photons_in_b < 0 || spec.photons_in_b > spec.total_photons)
    throw std::invalid_argument("photons in mode B must lie in [0, total]");
}

std::size_t start_rung(const ProductStateSpec& spec) {
  validate(spec);
  return static_cast<std::size_t>(spec.photons_in_b / 2);
}

FockPair EvolvedState::rung_fock(std::size_t n) const {
  const int offset = parity == LadderParity::Even ? 0 : 1;
  const int n2 = 2 * static_cast<int>(n) + offset;
  if (n2 > total_photons) throw std::invalid_argument("rung index beyond the ladder");
  return FockPair(total_photons - n2, n2);
}

EvolvedState evolve(const ProductStateSpec& spec, const SpectralDecomposition& decomp,
                    const HamiltonianParams& params, double t) {
  validate(params);
  validate(spec);
  if (decomp.total_photons != params.total_photons ||
      spec.total_photons != params.total_photons)
    throw std::invalid_argument("photon numbers of state, decomposition and parameters disagree");

  const bool odd_ladder = spec.photons_in_b % 2 != 0;
  const BlockEigen& eig = odd_ladder ? decomp.odd : decomp.even;
  const std::size_t dim = eig.values.size();

  EvolvedState state;
  state.total_photons = spec.total_photons;
  state.time = t;
  state.parity = odd_ladder ? LadderParity::Odd : LadderParity::Even;
  state.start = start_rung(spec);
  state.amplitudes.assign(dim, {0.0, 0.0});

  // Grouping the phase as lambda * (g*t) keeps |a_n(g, t)| == |a_n(1, g*t)|
  // bit-for-bit, which the scale-invariance checks rely on.
  const double gt = params.g * t;
  for (std::size_t k = 0; k < dim; ++k) {
    const std::complex<double> rotation = std::polar(1.0, -eig.values[k] * gt);
    const double weight = eig.vectors(state.start, k);
    for (std::size_t n = 0; n < dim; ++n)
      state.amplitudes[n] += rotation * (weight * eig.vectors(n, k));
  }
  return state;
}

EvolvedState amplitude_phase_convention(const EvolvedState& state) {
  constexpr double kThreshold = 1e-12;
  const std::size_t dim = state.amplitudes.size();
  if (state.start >= dim) throw std::invalid_argument("initial rung beyond the ladder");

  std::size_t ref = state.start;
  if (std::abs(state.amplitudes[ref]) <= kThreshold) {
    ref = dim;
    for (std::size_t n = 0; n < dim; ++n) {
      if (std::abs(state.amplitudes[n]) > kThreshold) {
        ref = n;
        break;
      }
    }
    if (ref == dim) return state;  // no weight anywhere, nothing to rotate
  }

  const std::complex<double> a = state.amplitudes[ref];
  const std::complex<double> rotation = std::conj(a) / std::abs(a);
  EvolvedState out = state;
  for (auto& amp : out.amplitudes) amp *= rotation;
  return out;
}

}  // namespace susyent
