#pragma once

// Slow-path verifier, deliberately sharing no numerical code with the fast
// path: dense Hamiltonians assembled from raw boson matrix elements
// <n+1|adag|n> = sqrt(n+1), diagonalized with a cyclic complex-Hermitian
// Jacobi sweep, evolved by explicit eigenexpansion, and reduced by explicit
// partial trace.  Test-grade throughout; no performance contract.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "susyent/dynamics.hpp"
#include "susyent/hamiltonian.hpp"
#include "susyent/matrix.hpp"

namespace susyent {

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMat vectors;                // unitary columns
};

// Cyclic Jacobi for Hermitian matrices.  Throws std::invalid_argument when
// the input is visibly non-Hermitian, ConsistencyError when sweeps fail to
// converge.
HermitianEigen hermitian_eigen(const CMat& matrix);

// Row-major product-basis index of |n1>_A |n2>_B with n_i <= cutoff.
std::size_t product_index(int n1, int n2, int cutoff);

// Single-mode annihilation operator on {|0>, ..., |cutoff>}.
CMat mode_lowering(int cutoff);
CMat dagger(const CMat& matrix);
CMat kron(const CMat& a, const CMat& b);

// Full product-space H = omega*(n1+n2) + g*(a1^+^2 a2^2 + a2^+^2 a1^2),
// dimension (cutoff+1)^2.  Exercised at small N to validate the restricted
// builds; too large for routine use.
CMat dense_hamiltonian(const HamiltonianParams& params, int cutoff);

// e^{-iHt} |N-L, L> over the product basis (length (cutoff+1)^2), computed
// inside the conserved total-photon sector.  cutoff defaults to N; anything
// smaller cannot hold the state and is rejected.
std::vector<std::complex<double>> oracle_evolve(const ProductStateSpec& spec,
                                                const HamiltonianParams& params, double t,
                                                std::optional<int> cutoff = std::nullopt);

// Entanglement entropy from the explicit reduced density matrix: rho_A by
// partial trace over mode B, then -sum mu ln mu over eigenvalues mu > 1e-15.
double oracle_entropy(const std::vector<std::complex<double>>& state, int cutoff);

}  // namespace susyent
