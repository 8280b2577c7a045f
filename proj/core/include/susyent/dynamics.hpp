#pragma once

// Closed-form time evolution of a two-mode product state |N-L>_A |L>_B.
// The initial state sits on one rung of a single parity ladder, so the
// evolved amplitudes are a finite spectral sum over that ladder alone:
//   a_n(t) = sum_k exp(-i g lambda_k t) V(start,k) V(n,k).
// The uniform phase exp(-i omega N t) from the diagonal is dropped; it
// cancels in every probability and entropy.

#include <complex>
#include <cstddef>
#include <vector>

#include "susyent/basis.hpp"
#include "susyent/hamiltonian.hpp"
#include "susyent/spectrum.hpp"

namespace susyent {

struct ProductStateSpec {
  int total_photons = 1;  // odd, >= 1
  int photons_in_b = 0;   // 0 <= L <= N
};

void validate(const ProductStateSpec& spec);

// Rung index of |N-L, L> inside its parity ladder.
std::size_t start_rung(const ProductStateSpec& spec);

// Amplitudes over the rungs of the parity ladder containing the start state.
// Rung n holds the Fock pair (N - 2n - d, 2n + d) with d = L mod 2.
struct EvolvedState {
  int total_photons = 0;
  double time = 0.0;
  LadderParity parity = LadderParity::Even;
  std::size_t start = 0;  // rung of the initial product state
  std::vector<std::complex<double>> amplitudes;

  FockPair rung_fock(std::size_t n) const;
};

EvolvedState evolve(const ProductStateSpec& spec, const SpectralDecomposition& decomp,
                    const HamiltonianParams& params, double t);

// Rotates the state by a global phase so the amplitude of the initial rung
// (or, if that one vanishes, the lowest rung carrying weight above 1e-12)
// is real and non-negative.  Probabilities are unchanged.
EvolvedState amplitude_phase_convention(const EvolvedState& state);

}  // namespace susyent
