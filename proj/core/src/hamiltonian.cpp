#include "susyent/hamiltonian.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace susyent {

void validate(const HamiltonianParams& params) {
  if (params.total_photons < 1)
    throw std::invalid_argument("HamiltonianParams: total photon number must be >= 1");
  if (!std::isfinite(params.omega) || !std::isfinite(params.g))
    throw std::invalid_argument("HamiltonianParams: omega and g must be finite");
}

double coupling_A(int k, int twice_j) {
  if (k < 1 || k > twice_j - 1)
    throw std::invalid_argument("coupling_A: require 1 <= k <= 2j-1, got k=" +
                                std::to_string(k) + " with 2j=" + std::to_string(twice_j));
  const std::int64_t kk = k;
  const std::int64_t n = twice_j;
  return std::sqrt(static_cast<double>(kk * (kk + 1) * (n - kk) * (n - kk + 1)));
}

Mat build_sector_matrix(const HamiltonianParams& params) {
  validate(params);
  const int n = params.total_photons;
  const SectorBasis basis(n);
  Mat h(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    h(i, i) = params.omega * n;
    // J+ sends index i to i-2; assign both triangles from the same element.
    if (i >= 2) {
      const double elem = params.g * ladder_plus_element(basis.state(i));
      h(i - 2, i) = elem;
      h(i, i - 2) = elem;
    }
  }
  return h;
}

ParityBlockPair split_parity_blocks(const HamiltonianParams& params) {
  validate(params);
  const int n = params.total_photons;
  const SectorBasis basis(n);

  auto make_block = [&](const std::vector<std::size_t>& indices, LadderParity parity) {
    ParityBlock block;
    block.parity = parity;
    block.dimension = indices.size();
    block.offdiag.reserve(indices.size() > 0 ? indices.size() - 1 : 0);
    for (std::size_t r = 0; r + 1 < indices.size(); ++r)
      block.offdiag.push_back(ladder_minus_element(basis.state(indices[r])));
    return block;
  };

  ParityBlockPair pair;
  pair.even = make_block(basis.even_indices(), LadderParity::Even);
  pair.odd = make_block(basis.odd_indices(), LadderParity::Odd);
  pair.isospectral = (n % 2 == 1);
  return pair;
}

TruncatedFockBasis::TruncatedFockBasis(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0)
    throw std::invalid_argument("TruncatedFockBasis: cutoff must be non-negative");
  states_.reserve(static_cast<std::size_t>(cutoff + 1) * (cutoff + 2) / 2);
  for (int total = 0; total <= cutoff; ++total)
    for (int n2 = 0; n2 <= total; ++n2) states_.emplace_back(total - n2, n2);
}

std::size_t TruncatedFockBasis::index_of(int n1, int n2) const {
  if (n1 < 0 || n2 < 0 || n1 + n2 > cutoff_)
    throw std::invalid_argument("TruncatedFockBasis::index_of: state outside truncation");
  const int total = n1 + n2;
  return static_cast<std::size_t>(total) * (total + 1) / 2 + static_cast<std::size_t>(n2);
}

CMat GeneralKKMatrix::to_dense() const {
  CMat dense(basis.size(), basis.size());
  for (const auto& e : entries) dense(e.row, e.col) += e.value;
  return dense;
}

namespace {

// <n+p| (a^dag)^p |n> = sqrt((n+p)! / n!), as a double.
double raising_amplitude(int n, int p) {
  double prod = 1.0;
  for (int i = 1; i <= p; ++i) prod *= n + i;
  return std::sqrt(prod);
}

// <n-p| a^p |n> = sqrt(n! / (n-p)!); requires n >= p.
double lowering_amplitude(int n, int p) {
  double prod = 1.0;
  for (int i = 0; i < p; ++i) prod *= n - i;
  return std::sqrt(prod);
}

}  // namespace

GeneralKKMatrix build_general_kk(const GeneralKKParams& params) {
  if (params.r < 1 || params.s < params.r)
    throw std::invalid_argument("build_general_kk: require 1 <= r <= s");
  if (params.cutoff < params.s)
    throw std::invalid_argument("build_general_kk: cutoff must be >= s");

  GeneralKKMatrix kk{TruncatedFockBasis(params.cutoff), {}};
  const auto& basis = kk.basis;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const FockPair& p = basis.state(col);
    const double diag = params.omega1 * p.n1 + params.omega2 * p.n2;
    if (diag != 0.0) kk.entries.push_back({col, col, {diag, 0.0}});

    // g (a1^dag)^s a2^r: (n1,n2) -> (n1+s, n2-r).  The conjugate transition
    // is emitted with conj(g) so the stored matrix is exactly Hermitian.
    if (p.n2 >= params.r && p.n1 + params.s + p.n2 - params.r <= params.cutoff) {
      const double amp =
          raising_amplitude(p.n1, params.s) * lowering_amplitude(p.n2, params.r);
      const std::size_t row = basis.index_of(p.n1 + params.s, p.n2 - params.r);
      kk.entries.push_back({row, col, params.g * amp});
      kk.entries.push_back({col, row, std::conj(params.g) * amp});
    }
  }
  return kk;
}

}  // namespace susyent
