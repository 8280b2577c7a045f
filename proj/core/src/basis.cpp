#include "susyent/basis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace susyent {

JMIndex::JMIndex(int twice_j, int twice_m) : twice_j_(twice_j), twice_m_(twice_m) {
  if (twice_j < 0)
    throw std::invalid_argument("JMIndex: 2j must be non-negative, got " +
                                std::to_string(twice_j));
  if (twice_m < -twice_j || twice_m > twice_j)
    throw std::invalid_argument("JMIndex: require -j <= m <= j");
  if (((twice_j - twice_m) & 1) != 0)
    throw std::invalid_argument("JMIndex: j and m must both be integer or both half-odd");
}

FockPair::FockPair(int n1_, int n2_) : n1(n1_), n2(n2_) {
  if (n1 < 0 || n2 < 0)
    throw std::invalid_argument("FockPair: photon numbers must be non-negative");
}

Rational Rational::reduced(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  return g > 0 ? Rational{num / g, den / g} : Rational{0, 1};
}

JMIndex jm_from_fock(const FockPair& pair) {
  return JMIndex(pair.n1 + pair.n2, pair.n1 - pair.n2);
}

FockPair fock_from_jm(const JMIndex& idx) {
  return FockPair((idx.twice_j() + idx.twice_m()) / 2, (idx.twice_j() - idx.twice_m()) / 2);
}

namespace {

// Integer product under the square root of J+ |j,m>.  In Fock occupations it
// is n2(n2-1)(n1+1)(n1+2), which is exactly the raw boson matrix element of
// (a1^dag)^2 a2^2 squared; it vanishes iff the target state leaves the ladder.
std::int64_t ladder_plus_product(const JMIndex& idx) {
  const FockPair p = fock_from_jm(idx);
  const std::int64_t n1 = p.n1;
  const std::int64_t n2 = p.n2;
  return n2 * (n2 - 1) * (n1 + 1) * (n1 + 2);
}

}  // namespace

double ladder_plus_element(const JMIndex& idx) {
  const std::int64_t prod = ladder_plus_product(idx);
  return prod <= 0 ? 0.0 : std::sqrt(static_cast<double>(prod));
}

double ladder_minus_element(const JMIndex& idx) {
  // Mirror of J+: swap the roles of the modes.
  const FockPair p = fock_from_jm(idx);
  const std::int64_t n1 = p.n1;
  const std::int64_t n2 = p.n2;
  const std::int64_t prod = n1 * (n1 - 1) * (n2 + 1) * (n2 + 2);
  return prod <= 0 ? 0.0 : std::sqrt(static_cast<double>(prod));
}

double higgs_commutator_defect(const FockPair& pair) {
  // <J+ J-> - <J- J+> = |J-|psi>|^2 - |J+|psi>|^2, both integers.
  const std::int64_t n1 = pair.n1;
  const std::int64_t n2 = pair.n2;
  const std::int64_t minus_sq = n1 * (n1 - 1) * (n2 + 1) * (n2 + 2);
  const std::int64_t plus_sq = n2 * (n2 - 1) * (n1 + 1) * (n1 + 2);
  return static_cast<double>((minus_sq > 0 ? minus_sq : 0) - (plus_sq > 0 ? plus_sq : 0));
}

Rational r0_eigenvalue(const FockPair& pair, int r, int s) {
  if (r < 1 || s < r)
    throw std::invalid_argument("r0_eigenvalue: require 1 <= r <= s, got r=" +
                                std::to_string(r) + " s=" + std::to_string(s));
  return Rational::reduced(static_cast<long long>(r) * pair.n1 +
                               static_cast<long long>(s) * pair.n2,
                           r + s);
}

SectorBasis::SectorBasis(int total_photons) : total_photons_(total_photons) {
  if (total_photons < 0)
    throw std::invalid_argument("SectorBasis: total photon number must be non-negative");
  states_.reserve(static_cast<std::size_t>(total_photons) + 1);
  for (int n2 = 0; n2 <= total_photons; ++n2) {
    states_.emplace_back(total_photons, total_photons - 2 * n2);
    ((n2 & 1) == 0 ? even_indices_ : odd_indices_).push_back(static_cast<std::size_t>(n2));
  }
}

std::size_t SectorBasis::index_of(const JMIndex& idx) const {
  if (idx.twice_j() != total_photons_)
    throw std::invalid_argument("SectorBasis::index_of: state belongs to a different sector");
  return static_cast<std::size_t>((idx.twice_j() - idx.twice_m()) / 2);
}

}  // namespace susyent
