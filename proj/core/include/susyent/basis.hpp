#pragma once

// Fixed-total-photon-number sector of a two-mode bosonic field.
//
// Conventions: for a two-mode Fock state |n1>_A |n2>_B with n1 + n2 = N,
//   j = (n1 + n2)/2,   m = (n1 - n2)/2,   so   n1 = j + m,  n2 = j - m.
// The two-photon exchange generators J+ = (a1^dag)^2 a2^2 and
// J- = a1^2 (a2^dag)^2 act as step-two ladder operators in m:
//   J+ |j,m> = sqrt((j-m)(j+m+1)(j-m-1)(j+m+2)) |j,m+2>
//   J- |j,m> = sqrt((j+m)(j-m+1)(j+m-1)(j-m+2)) |j,m-2>
// Half-integers are stored as doubled integers (2j, 2m) so that parity
// arithmetic and basis indexing are exact.

#include <cstdint>
#include <vector>

namespace susyent {

class JMIndex {
 public:
  // Arguments are the doubled values 2j and 2m.  Throws std::invalid_argument
  // when 2j < 0, |2m| > 2j, or 2j and 2m differ in parity.
  JMIndex(int twice_j, int twice_m);

  int twice_j() const { return twice_j_; }
  int twice_m() const { return twice_m_; }
  double j() const { return 0.5 * twice_j_; }
  double m() const { return 0.5 * twice_m_; }

  friend bool operator==(const JMIndex&, const JMIndex&) = default;

 private:
  int twice_j_;
  int twice_m_;
};

struct FockPair {
  FockPair(int n1_, int n2_);  // throws std::invalid_argument on negative input

  int n1;  // photons in mode A
  int n2;  // photons in mode B

  friend bool operator==(const FockPair&, const FockPair&) = default;
};

// Reduced fraction, denominator > 0.  Return type of r0_eigenvalue; keeps the
// conserved-charge comparisons exact.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational reduced(long long num, long long den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

JMIndex jm_from_fock(const FockPair& pair);
FockPair fock_from_jm(const JMIndex& idx);

// Coefficient of |j,m+2> in J+ |j,m>; 0 when the target lies outside the
// ladder (the integer product under the root vanishes there).
double ladder_plus_element(const JMIndex& idx);

// Coefficient of |j,m-2> in J- |j,m>; equals ladder_plus_element(j, m-2).
double ladder_minus_element(const JMIndex& idx);

// Diagonal matrix element D(n1,n2) = <n1,n2| [J+,J-] |n1,n2>, evaluated from
// the ladder elements.  Satisfies D = 2m(4j^2+4j-2) - 8m^3 identically.
double higgs_commutator_defect(const FockPair& pair);

// Eigenvalue of R0 = (r a1^dag a1 + s a2^dag a2)/(r+s) on |n1,n2>.
// Requires 1 <= r <= s; conserved by the (r,s) exchange terms.
Rational r0_eigenvalue(const FockPair& pair, int r, int s);

// The (N+1)-dimensional sector with fixed n1 + n2 = N, ordered m = j, j-1,
// ..., -j (equivalently n2 = 0, 1, ..., N).  The step-two ladder splits it
// into an even class (n2 even) and an odd class (n2 odd).
class SectorBasis {
 public:
  explicit SectorBasis(int total_photons);  // throws on N < 0

  int total_photons() const { return total_photons_; }
  std::size_t size() const { return states_.size(); }

  const std::vector<JMIndex>& states() const { return states_; }
  const JMIndex& state(std::size_t i) const { return states_[i]; }

  // Position of |j,m> in the m-descending order: index = j - m = n2.
  std::size_t index_of(const JMIndex& idx) const;

  const std::vector<std::size_t>& even_indices() const { return even_indices_; }
  const std::vector<std::size_t>& odd_indices() const { return odd_indices_; }

 private:
  int total_photons_;
  std::vector<JMIndex> states_;
  std::vector<std::size_t> even_indices_;
  std::vector<std::size_t> odd_indices_;
};

}  // namespace susyent
