#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "szego_lab/curve.hpp"
#include "szego_lab/numerics.hpp"
#include "szego_lab/szego.hpp"

namespace szego_lab {

/// J_n(z) = int_xi^z Q^p dt as an exact polynomial anchored at J_n(xi) = 0.
inline ComplexPoly compute_Jn(const ComplexPoly& Q, int p, cplx xi) {
  if (p < 1) throw std::invalid_argument("compute_Jn: p must be positive");
  const ComplexPoly A = poly_antiderivative(poly_pow(Q, p));
  return poly_add_constant(A, -A(xi));
}

/// Phi at the image of a disk point u: int_{[0,u]} (D_G(s)/D_G(0))^p psi'(s) ds.
inline cplx phi_at_disk_point(const ConformalPair& pair, const OuterFunction& D, cplx u, int K = 64) {
  if (u == cplx{}) return {};
  const double c0 = D.c[0].real();
  auto integrand = [&](cplx s) { return std::exp(D.exponent(s) - c0) * map_forward(pair, s).dz; };
  return integrate_segment(integrand, cplx{}, u, K);
}

/// Phi(z) = int_xi^z (D/D(xi))^p dt, evaluated through t = psi(u) on the disk segment [0, phi(z)].
inline cplx compute_phi_integral(const ConformalPair& pair, const OuterFunction& D, cplx z, int K = 64) {
  return phi_at_disk_point(pair, D, map_inverse(pair, z), K);
}

struct TransportPair {
  ComplexPoly Jn;
  ConformalPair pair;
  OuterFunction D;
  int p = 2;
  int K = 64;

  cplx J(cplx z) const { return Jn(z); }
  cplx Phi(cplx z) const { return compute_phi_integral(pair, D, z, K); }
};

inline TransportPair make_transport(const ConformalPair& pair, const OuterFunction& D, const ComplexPoly& Q,
                                    int K = 64) {
  return TransportPair{compute_Jn(Q, D.p, pair.xi()), pair, D, D.p, K};
}

/// Polar lattice psi(r e^{i alpha}) with r = r_max j / n_r (j = 0..n_r), alpha = 2 pi k / n_ang,
/// together with the Phi values there. Phi does not depend on n, so the harness builds it
/// once per (curve, weight, p) and reuses it across degrees.
struct CompactLattice {
  double r_max = 0.0;
  int n_r = 0;
  int n_ang = 0;
  std::vector<cplx> z;
  std::vector<cplx> phi;
};

inline CompactLattice make_compact_lattice(const ConformalPair& pair, const OuterFunction& D, double r_max,
                                           int n_r, int n_ang, int K = 64) {
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("compact lattice: r_max must lie in (0, 1)");
  if (n_r < 1 || n_ang < 1) throw std::invalid_argument("compact lattice: need n_r, n_ang >= 1");
  CompactLattice L{r_max, n_r, n_ang, {}, {}};
  L.z.reserve(static_cast<std::size_t>(n_r) * n_ang + 1);
  L.phi.reserve(L.z.capacity());
  L.z.push_back(pair.xi());
  L.phi.push_back(0.0);
  for (int j = 1; j <= n_r; ++j) {
    const double r = r_max * j / n_r;
    for (int k = 0; k < n_ang; ++k) {
      const cplx u = std::polar(r, 2.0 * std::numbers::pi * k / n_ang);
      L.z.push_back(map_forward(pair, u).z);
      L.phi.push_back(phi_at_disk_point(pair, D, u, K));
    }
  }
  return L;
}

inline double sup_diff_on_lattice(const CompactLattice& L, const ComplexPoly& Jn) {
  double best = 0.0;
  for (std::size_t i = 0; i < L.z.size(); ++i) best = std::max(best, std::abs(Jn(L.z[i]) - L.phi[i]));
  return best;
}

/// Lattice sup of |J_n - Phi| over psi({|u| <= r_max}); a lower bound for the sup over G.
inline double sup_diff_on_compact(const ConformalPair& pair, const TransportPair& T, double r_max, int n_r = 8,
                                  int n_ang = 512) {
  return sup_diff_on_lattice(make_compact_lattice(pair, T.D, r_max, n_r, n_ang, T.K), T.Jn);
}

}  // namespace szego_lab
