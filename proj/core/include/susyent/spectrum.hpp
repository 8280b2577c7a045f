#pragma once

// Exact spectrum of the sector Hamiltonian.  For odd N the two parity
// ladders are isospectral (reversed off-diagonal sequences), so every energy
// E_k = omega*N + g*lambda_k appears exactly twice; lambda_k are the
// eigenvalues of J+ + J- restricted to one ladder.

#include <vector>

#include "susyent/hamiltonian.hpp"
#include "susyent/matrix.hpp"

namespace susyent {

struct BlockEigen {
  std::vector<double> values;  // ascending
  Mat vectors;                 // orthonormal columns, first nonzero entry positive
};

struct SpectralDecomposition {
  int total_photons = 0;
  std::vector<double> lambdas;   // paired ladder eigenvalues (even-block values), ascending
  std::vector<double> energies;  // E_k = omega*N + g*lambda_k, one per degenerate pair
  BlockEigen even;
  BlockEigen odd;
};

// Diagonalizes one parity block.  Eigenvalues ascending; each eigenvector
// column is sign-fixed so its first component of magnitude > 1e-12 is
// positive.
BlockEigen diagonalize_block(const ParityBlock& block);

// det(lambda*I - T) for the zero-diagonal block T via the three-term
// recurrence p_d = lambda*p_{d-1} - offdiag_{d-1}^2 * p_{d-2}.
double char_poly_eval(const ParityBlock& block, double lambda);

// Requires odd N.  Diagonalizes both blocks, checks that their eigenvalue
// lists pair up within 1e-8 of the spectral spread, and that no block carries
// an internal near-tie (either failure throws ConsistencyError: the blocks
// are unreduced tridiagonals, whose eigenvalues are provably simple).
SpectralDecomposition assemble_spectrum(const HamiltonianParams& params);

// Element-wise pairing of two ascending eigenvalue lists; throws
// ConsistencyError on a gap beyond tol or an internal tie within tol.
// Exposed separately so the failure paths are testable.
void check_degenerate_pairing(const std::vector<double>& even_values,
                              const std::vector<double>& odd_values, double tol);

// Residual of the three-term eigenvector recursion
//   E_k C_m = omega*N*C_m + g*A(m->m-2)*C_{m-2} + g*A(m->m+2)*C_{m+2}
// over every eigenpair of both ladders, out-of-range C treated as zero.
// Returns max_k,m |residual| / max(1, |E_k|).
double verify_recursion(const SpectralDecomposition& decomp, const HamiltonianParams& params);

}  // namespace susyent
