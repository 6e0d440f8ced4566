#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "szego_lab/curve.hpp"
#include "szego_lab/grid.hpp"

namespace szego_lab {

/**
 * Szegő outer function of a boundary weight, pulled back to the unit disk.
 *
 * With W(theta) = rho_hat(theta) |psi'(e^{i theta})| (the boundary value of
 * rho / |phi'|) and Fourier coefficients c_k of log W,
 *
 *     D_G(w) = exp{ (1/p) (c_0 + 2 sum_{k=1}^{K} c_k w^k) }
 *
 * which is the Herglotz-kernel representation with kernel
 * (e^{i theta} + w) / (e^{i theta} - w). It is zero-free, D_G(0) = e^{c_0/p} > 0,
 * and |D_G|^p |phi'| = rho on the boundary. D_{E,rho}(z) = D_G(phi(z)).
 */
struct OuterFunction {
  int p = 2;
  int K = 0;
  std::vector<cplx> c;  // c[0..K], c[0] real
  double tail = 0.0;    // |c_K|
  bool truncation_warning = false;
  int active = 0;       // highest k kept in evaluation; dropped tail contributes <= 1e-14 * scale to the exponent

  /// c_0 + 2 sum c_k w^k
  cplx exponent(cplx w) const {
    cplx acc{};
    for (int k = active; k >= 1; --k) acc = (acc + c[k]) * w;
    return c[0] + 2.0 * acc;
  }

  double value_at_zero() const { return std::exp(c[0].real() / p); }
};

inline constexpr double kTruncationWarn = 1e-13;

inline OuterFunction build_outer(const BoundaryGrid& g, int p, int K = 256) {
  if (p < 2) throw std::invalid_argument("build_outer: p must be an integer >= 2");
  const int M = g.M;
  if (K < 1 || K > M / 2) throw std::invalid_argument("build_outer: need 1 <= K <= M/2");

  std::vector<double> logw(M);
  for (int j = 0; j < M; ++j) logw[j] = std::log(g.rho[j] * g.psi_prime_abs[j]);

  std::vector<cplx> twiddle(M);
  for (int m = 0; m < M; ++m) twiddle[m] = std::polar(1.0, -2.0 * std::numbers::pi * m / M);

  OuterFunction D;
  D.p = p;
  D.K = K;
  D.c.resize(K + 1);
  for (int k = 0; k <= K; ++k) {
    cplx s{};
    for (int j = 0; j < M; ++j) s += logw[j] * twiddle[(static_cast<long>(k) * j) % M];
    D.c[k] = s / static_cast<double>(M);
  }
  D.c[0] = D.c[0].real();
  D.tail = std::abs(D.c[K]);
  D.truncation_warning = D.tail > kTruncationWarn;

  double scale = std::abs(D.c[0]);
  for (int k = 1; k <= K; ++k) scale += 2.0 * std::abs(D.c[k]);
  const double drop = 1e-14 * std::max(1.0, scale);
  double tail_sum = 0.0;
  D.active = K;
  while (D.active >= 1 && tail_sum + 2.0 * std::abs(D.c[D.active]) <= drop) {
    tail_sum += 2.0 * std::abs(D.c[D.active]);
    --D.active;
  }
  return D;
}

inline cplx eval_outer(const OuterFunction& D, cplx w) { return std::exp(D.exponent(w) / static_cast<double>(D.p)); }

/// D_G(w)^p formed in the exponent, so no branch of a complex power is involved.
inline cplx eval_outer_power(const OuterFunction& D, cplx w) { return std::exp(D.exponent(w)); }

/// f*(u) = D_G(u) / D_G(0) for a disk point u.
inline cplx eval_target_disk(const OuterFunction& D, cplx u) {
  return std::exp((D.exponent(u) - D.c[0]) / static_cast<double>(D.p));
}

/// f*(z) = D_{E,rho}(z) / D_{E,rho}(xi); equals 1 at the base point.
inline cplx eval_target(const ConformalPair& pair, const OuterFunction& D, cplx z) {
  return eval_outer(D, map_inverse(pair, z)) / eval_outer(D, 0.0);
}

/// Lower bound on |D_G| over the closed disk.
inline double outer_modulus_lower_bound(const OuterFunction& D) {
  double s = std::abs(D.c[0]);
  for (int k = 1; k <= D.K; ++k) s += 2.0 * std::abs(D.c[k]);
  return std::exp(-s / D.p);
}

}  // namespace szego_lab
