#include "susyent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "susyent/errors.hpp"

namespace susyent {

namespace {

double frobenius(const CMat& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

double offdiag_norm(const CMat& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace

HermitianEigen hermitian_eigen(const CMat& matrix) {
  const std::size_t n = matrix.rows();
  if (n == 0 || matrix.cols() != n) throw std::invalid_argument("matrix must be square");

  const double scale = std::max(1.0, frobenius(matrix));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(matrix(i, j) - std::conj(matrix(j, i))) > 1e-12 * scale)
        throw std::invalid_argument("matrix is not Hermitian");

  CMat a = matrix;
  CMat v = CMat::identity(n);
  const double target = 1e-15 * scale;

  // Cyclic-by-row sweeps; each rotation zeroes a(p,q) exactly.
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (offdiag_norm(a) > target) {
    if (++sweep > kMaxSweeps)
      throw ConsistencyError("Jacobi sweeps failed to converge after " +
                             std::to_string(kMaxSweeps) + " passes");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double m = std::abs(a(p, q));
        if (m <= target / static_cast<double>(n)) continue;
        const double phi = std::arg(a(p, q));
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (app - aqq) / (2.0 * m);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(tau, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> fwd = s * std::polar(1.0, -phi);   // pairs with column p
        const std::complex<double> bwd = s * std::polar(1.0, phi);    // pairs with column q

        a(p, p) = c * c * app + s * s * aqq + 2.0 * c * s * m;
        a(q, q) = s * s * app + c * c * aqq - 2.0 * c * s * m;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const std::complex<double> akp = a(k, p);
          const std::complex<double> akq = a(k, q);
          a(k, p) = c * akp + fwd * akq;
          a(k, q) = -bwd * akp + c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> vkp = v(k, p);
          const std::complex<double> vkq = v(k, q);
          v(k, p) = c * vkp + fwd * vkq;
          v(k, q) = -bwd * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out;
  out.values.reserve(n);
  out.vectors = CMat(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values.push_back(a(order[c], order[c]).real());
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

std::size_t product_index(int n1, int n2, int cutoff) {
  if (cutoff < 0 || n1 < 0 || n2 < 0 || n1 > cutoff || n2 > cutoff)
    throw std::invalid_argument("occupation outside the truncated Fock space");
  return static_cast<std::size_t>(n1) * static_cast<std::size_t>(cutoff + 1) +
         static_cast<std::size_t>(n2);
}

CMat mode_lowering(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  const std::size_t dim = static_cast<std::size_t>(cutoff) + 1;
  CMat a(dim, dim);
  for (std::size_t col = 1; col < dim; ++col)
    a(col - 1, col) = std::sqrt(static_cast<double>(col));
  return a;
}

CMat dagger(const CMat& matrix) {
  CMat out(matrix.cols(), matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j) out(j, i) = std::conj(matrix(i, j));
  return out;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::complex<double> f = a(i, j);
      if (f == std::complex<double>(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f * b(k, l);
    }
  return out;
}

namespace {

CMat matmul(const CMat& a, const CMat& b) {
  CMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::complex<double> f = a(i, k);
      if (f == std::complex<double>(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += f * b(k, j);
    }
  return out;
}

// (N+1)-dimensional restriction of H to the total-photon sector, indexed by
// the mode-B occupation, assembled from raw boson amplitudes.
CMat sector_hamiltonian_raw(const HamiltonianParams& params) {
  const int n = params.total_photons;
  CMat h(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  for (int n2 = 0; n2 <= n; ++n2) {
    const int n1 = n - n2;
    h(n2, n2) = params.omega * n;
    if (n2 >= 2) {
      // <n1+2, n2-2| a1^+^2 a2^2 |n1, n2>
      const double amp = std::sqrt(static_cast<double>(n2) * (n2 - 1)) *
                         std::sqrt(static_cast<double>(n1 + 1) * (n1 + 2));
      h(n2 - 2, n2) = params.g * amp;
      h(n2, n2 - 2) = params.g * amp;
    }
  }
  return h;
}

}  // namespace

CMat dense_hamiltonian(const HamiltonianParams& params, int cutoff) {
  validate(params);
  if (cutoff < params.total_photons)
    throw std::invalid_argument("cutoff must reach the total photon number");
  const CMat a = mode_lowering(cutoff);
  const CMat ad = dagger(a);
  const CMat num = matmul(ad, a);
  const CMat eye = CMat::identity(a.rows());
  const CMat a2 = matmul(a, a);
  const CMat ad2 = matmul(ad, ad);

  const CMat number_full_a = kron(num, eye);
  const CMat number_full_b = kron(eye, num);
  const CMat exchange = kron(ad2, a2);

  const std::size_t dim = number_full_a.rows();
  CMat h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const std::complex<double> x =
          params.omega * (number_full_a(i, j) + number_full_b(i, j)) +
          params.g * (exchange(i, j) + std::conj(exchange(j, i)));
      h(i, j) = x;
    }
  return h;
}

std::vector<std::complex<double>> oracle_evolve(const ProductStateSpec& spec,
                                                const HamiltonianParams& params, double t,
                                                std::optional<int> cutoff) {
  validate(spec);
  validate(params);
  if (spec.total_photons != params.total_photons)
    throw std::invalid_argument("photon numbers of state and parameters disagree");
  const int n = params.total_photons;
  const int cut = cutoff.value_or(n);
  if (cut < n) throw std::invalid_argument("cutoff must reach the total photon number");

  const HermitianEigen eig = hermitian_eigen(sector_hamiltonian_raw(params));
  const std::size_t dim = eig.values.size();
  const std::size_t start = static_cast<std::size_t>(spec.photons_in_b);

  // c_m(t) = sum_k e^{-i E_k t} V(m,k) conj(V(start,k)); the omega*N phase
  // stays in, this path reports the honest propagator.
  std::vector<std::complex<double>> sector(dim, {0.0, 0.0});
  for (std::size_t k = 0; k < dim; ++k) {
    const std::complex<double> rotation = std::polar(1.0, -eig.values[k] * t);
    const std::complex<double> weight = std::conj(eig.vectors(start, k));
    for (std::size_t m = 0; m < dim; ++m)
      sector[m] += rotation * weight * eig.vectors(m, k);
  }

  std::vector<std::complex<double>> state(
      static_cast<std::size_t>(cut + 1) * static_cast<std::size_t>(cut + 1), {0.0, 0.0});
  for (std::size_t n2 = 0; n2 < dim; ++n2)
    state[product_index(n - static_cast<int>(n2), static_cast<int>(n2), cut)] = sector[n2];
  return state;
}

double oracle_entropy(const std::vector<std::complex<double>>& state, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  const std::size_t dim = static_cast<std::size_t>(cutoff) + 1;
  if (state.size() != dim * dim)
    throw std::invalid_argument("state length does not match the cutoff");

  CMat rho(dim, dim);
  for (std::size_t m1 = 0; m1 < dim; ++m1)
    for (std::size_t n1 = 0; n1 < dim; ++n1) {
      std::complex<double> sum = 0.0;
      for (std::size_t n2 = 0; n2 < dim; ++n2)
        sum += state[m1 * dim + n2] * std::conj(state[n1 * dim + n2]);
      rho(m1, n1) = sum;
    }

  const HermitianEigen eig = hermitian_eigen(rho);
  double entropy = 0.0;
  for (const double mu : eig.values)
    if (mu > 1e-15) entropy -= mu * std::log(mu);
  return entropy;
}

}  // namespace susyent
