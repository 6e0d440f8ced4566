#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "szego_lab/curve.hpp"
#include "szego_lab/weight.hpp"

namespace szego_lab {

/**
 * Equispaced samples of the boundary curve E = psi(unit circle).
 *
 * Every boundary integral in the library goes through one of two
 * transplantation rules:
 *
 *     over E:       |dt| = |psi'(e^{i theta})| d theta
 *     over |u|=1:   |du| = d theta
 *
 * equivalently |du| = |phi'(t)| |dt| and phi'(t) = 1 / psi'(phi(t)) on E.
 */
struct BoundaryGrid {
  int M = 0;
  double dtheta = 0.0;
  ConformalPair pair = ConformalPair::disk();
  WeightSpec weight;
  std::vector<double> theta;
  std::vector<cplx> u;               // e^{i theta_j}
  std::vector<cplx> t;               // psi(u_j)
  std::vector<double> psi_prime_abs; // |psi'(u_j)|
  std::vector<double> rho;           // rho_hat(theta_j)

  std::size_t size() const { return theta.size(); }

  /// Quadrature weight of node j for integrals over E with respect to |dt|.
  double arc_element(std::size_t j) const { return psi_prime_abs[j] * dtheta; }
};

inline bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

inline BoundaryGrid make_boundary_grid(const ConformalPair& pair, const WeightSpec& weight, int M) {
  if (!is_power_of_two(M) || M < 64) {
    throw std::invalid_argument("make_boundary_grid: M must be a power of two >= 64");
  }
  BoundaryGrid g{M, 2.0 * std::numbers::pi / M, pair, weight, {}, {}, {}, {}, {}};
  g.theta.resize(M);
  g.u.resize(M);
  g.t.resize(M);
  g.psi_prime_abs.resize(M);
  g.rho.resize(M);
  for (int j = 0; j < M; ++j) {
    const double th = g.dtheta * j;
    g.theta[j] = th;
    g.u[j] = std::polar(1.0, th);
    const MapValue mv = map_forward(pair, g.u[j]);
    g.t[j] = mv.z;
    g.psi_prime_abs[j] = std::abs(mv.dz);
    g.rho[j] = eval_weight(weight, th);
    if (!(g.rho[j] > 0.0)) {
      throw std::invalid_argument("make_boundary_grid: weight must be strictly positive");
    }
  }
  return g;
}

/// |E|, the arc length of the boundary curve.
inline double contour_length(const BoundaryGrid& g) {
  double s = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) s += g.arc_element(j);
  return s;
}

/// Transplanted Szegő integral: int_E log(rho) |phi'| |dt| = int_0^{2pi} log(rho_hat) d theta.
/// Finite for every built-in weight.
inline double validate_szego_condition(const BoundaryGrid& g) {
  double s = 0.0;
  for (double r : g.rho) s += std::log(r);
  return s * g.dtheta;
}

}  // namespace szego_lab
