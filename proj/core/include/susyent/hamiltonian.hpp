#pragma once

// Sector Hamiltonian for the resonant two-photon exchange model
//   H = omega (a1^dag a1 + a2^dag a2) + g ((a1^dag)^2 a2^2 + a1^2 (a2^dag)^2),
// plus a truncated-space builder for the general (r,s) exchange Hamiltonian
//   H = omega1 a1^dag a1 + omega2 a2^dag a2 + g (a1^dag)^s a2^r + conj(g) a1^s (a2^dag)^r
// used only for conservation and specialization checks.

#include <complex>
#include <cstddef>
#include <vector>

#include "susyent/basis.hpp"
#include "susyent/matrix.hpp"

namespace susyent {

struct HamiltonianParams {
  double omega = 0.0;    // common mode frequency (hbar = 1)
  double g = 1.0;        // real exchange coupling
  int total_photons = 1; // N >= 1
};

void validate(const HamiltonianParams& params);  // throws std::invalid_argument

struct GeneralKKParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  std::complex<double> g{1.0, 0.0};
  int r = 2;
  int s = 2;       // 1 <= r <= s
  int cutoff = 8;  // max total photons kept; cutoff >= s
};

enum class LadderParity { Even, Odd };  // parity of n2 = j - m along the ladder

// One step-two ladder of the sector: a real symmetric tridiagonal matrix with
// zero diagonal.  offdiag holds the couplings A_k = sqrt(k(k+1)(2j-k)(2j-k+1))
// with odd k on the even ladder and even k on the odd ladder.
struct ParityBlock {
  LadderParity parity = LadderParity::Even;
  std::size_t dimension = 0;
  std::vector<double> offdiag;
};

struct ParityBlockPair {
  ParityBlock even;
  ParityBlock odd;
  bool isospectral = false;  // true iff N odd (equal dimensions, reversed offdiagonals)
};

// A_k = sqrt(k(k+1)(2j-k)(2j-k+1)) for 1 <= k <= 2j-1; satisfies the
// reflection identity A_k = A_{2j-k}.
double coupling_A(int k, int twice_j);

// Dense (N+1)x(N+1) real symmetric sector matrix in m-descending order:
// diagonal omega*N, step-two off-diagonals g * ladder elements.
Mat build_sector_matrix(const HamiltonianParams& params);

// Splits the sector into its two ladders.  The blocks carry the raw couplings
// (omega shift removed, g factored out).  For odd N both blocks have
// dimension (N+1)/2 and the odd offdiagonal sequence is the even one
// reversed; for even N the dimensions differ and isospectral is false.
ParityBlockPair split_parity_blocks(const HamiltonianParams& params);

// Truncated two-mode Fock space {(n1,n2): n1+n2 <= cutoff}, sector-contiguous
// order (ascending total, then n2 ascending within a sector).
class TruncatedFockBasis {
 public:
  explicit TruncatedFockBasis(int cutoff);

  int cutoff() const { return cutoff_; }
  std::size_t size() const { return states_.size(); }
  const FockPair& state(std::size_t i) const { return states_[i]; }
  std::size_t index_of(int n1, int n2) const;  // throws if outside truncation

 private:
  int cutoff_;
  std::vector<FockPair> states_;
};

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  std::complex<double> value;
};

// Sparse Hermitian matrix over a TruncatedFockBasis, stored with both
// triangles present so Hermiticity holds entry-for-entry as stored.
struct GeneralKKMatrix {
  TruncatedFockBasis basis;
  std::vector<SparseEntry> entries;

  CMat to_dense() const;  // test/inspection helper
};

GeneralKKMatrix build_general_kk(const GeneralKKParams& params);

}  // namespace susyent
