#include "susyent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "susyent/basis.hpp"
#include "susyent/errors.hpp"
#include "susyent/tridiagonal.hpp"

namespace susyent {

namespace {

// First component of magnitude above threshold decides the overall sign.
void fix_column_signs(Mat& vectors) {
  constexpr double kThreshold = 1e-12;
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    for (std::size_t r = 0; r < vectors.rows(); ++r) {
      const double v = vectors(r, c);
      if (std::abs(v) <= kThreshold) continue;
      if (v < 0.0) {
        for (std::size_t k = 0; k < vectors.rows(); ++k) vectors(k, c) = -vectors(k, c);
      }
      break;
    }
  }
}

}  // namespace

BlockEigen diagonalize_block(const ParityBlock& block) {
  if (block.dimension == 0) throw std::invalid_argument("empty parity block");
  if (block.offdiag.size() + 1 != block.dimension)
    throw std::invalid_argument("parity block off-diagonal length mismatch");
  TridiagonalEigen eig =
      tridiagonal_eigen(std::vector<double>(block.dimension, 0.0), block.offdiag);
  BlockEigen out;
  out.values = std::move(eig.values);
  out.vectors = std::move(eig.vectors);
  fix_column_signs(out.vectors);
  return out;
}

double char_poly_eval(const ParityBlock& block, double lambda) {
  // Leading-principal-minor recurrence for det(lambda*I - T), T zero-diagonal.
  double prev = 1.0;    // p_0
  double cur = lambda;  // p_1
  for (std::size_t d = 2; d <= block.dimension; ++d) {
    const double e = block.offdiag[d - 2];
    const double next = lambda * cur - e * e * prev;
    prev = cur;
    cur = next;
  }
  return block.dimension == 0 ? prev : cur;
}

void check_degenerate_pairing(const std::vector<double>& even_values,
                              const std::vector<double>& odd_values, double tol) {
  if (even_values.size() != odd_values.size())
    throw ConsistencyError("parity blocks differ in dimension; spectrum cannot pair up");
  const std::size_t n = even_values.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Unreduced tridiagonal blocks have simple eigenvalues, so a tie at the
    // pairing tolerance means the diagonalization itself went wrong.
    if (even_values[k + 1] - even_values[k] <= tol)
      throw ConsistencyError("near-degenerate eigenvalues inside the even ladder (gap " +
                             std::to_string(even_values[k + 1] - even_values[k]) + ")");
    if (odd_values[k + 1] - odd_values[k] <= tol)
      throw ConsistencyError("near-degenerate eigenvalues inside the odd ladder (gap " +
                             std::to_string(odd_values[k + 1] - odd_values[k]) + ")");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double gap = std::abs(even_values[k] - odd_values[k]);
    if (gap > tol)
      throw ConsistencyError("even/odd eigenvalue pairing broken at index " + std::to_string(k) +
                             " (gap " + std::to_string(gap) + ")");
  }
}

SpectralDecomposition assemble_spectrum(const HamiltonianParams& params) {
  validate(params);
  if (params.total_photons % 2 == 0)
    throw std::invalid_argument("paired spectrum requires an odd total photon number");

  const ParityBlockPair blocks = split_parity_blocks(params);
  SpectralDecomposition decomp;
  decomp.total_photons = params.total_photons;
  decomp.even = diagonalize_block(blocks.even);
  decomp.odd = diagonalize_block(blocks.odd);

  // Pairing tolerance is relative to the spectral spread; the floor covers
  // the N=1 sector where both ladders are the single eigenvalue zero.
  const double spread = decomp.even.values.back() - decomp.even.values.front();
  check_degenerate_pairing(decomp.even.values, decomp.odd.values, 1e-8 * std::max(1.0, spread));

  decomp.lambdas = decomp.even.values;
  decomp.energies.reserve(decomp.lambdas.size());
  for (const double lambda : decomp.lambdas)
    decomp.energies.push_back(params.omega * params.total_photons + params.g * lambda);
  return decomp;
}

double verify_recursion(const SpectralDecomposition& decomp, const HamiltonianParams& params) {
  validate(params);
  if (decomp.total_photons != params.total_photons)
    throw std::invalid_argument("decomposition was built for a different photon number");

  const SectorBasis basis(params.total_photons);
  const double diag = params.omega * params.total_photons;
  double worst = 0.0;

  const auto check_block = [&](const BlockEigen& eig, const std::vector<std::size_t>& indices) {
    const std::size_t dim = indices.size();
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
      const double energy = diag + params.g * eig.values[k];
      const double scale = std::max(1.0, std::abs(energy));
      for (std::size_t r = 0; r < dim; ++r) {
        const JMIndex state = basis.state(indices[r]);
        const double up = r + 1 < dim ? ladder_minus_element(state) * eig.vectors(r + 1, k) : 0.0;
        const double down = r > 0 ? ladder_plus_element(state) * eig.vectors(r - 1, k) : 0.0;
        const double residual =
            energy * eig.vectors(r, k) - diag * eig.vectors(r, k) - params.g * (up + down);
        worst = std::max(worst, std::abs(residual) / scale);
      }
    }
  };

  check_block(decomp.even, basis.even_indices());
  check_block(decomp.odd, basis.odd_indices());
  return worst;
}

}  // namespace susyent
