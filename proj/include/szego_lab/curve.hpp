#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "szego_lab/errors.hpp"

namespace szego_lab {

using cplx = std::complex<double>;

enum class CurveKind { Disk, Quadratic };

/**
 * A Jordan domain G described as the image of the closed unit disk under
 *
 *     psi(w) = xi + w + a w^2,     (a = 0 for the disk)
 *
 * with inverse phi : G -> unit disk. The family is normalized so that
 * phi(xi) = 0, |phi| = 1 on the boundary curve E, and phi'(xi) = 1.
 * Univalence on the closed disk holds exactly when |a| < 1/2.
 */
class ConformalPair {
 public:
  static ConformalPair disk(cplx xi = {}) { return ConformalPair(CurveKind::Disk, {}, xi); }

  static ConformalPair quadratic(cplx a, cplx xi = {}) {
    if (!(std::abs(a) < 0.5)) {
      throw std::invalid_argument("quadratic map requires |a| < 1/2 for univalence");
    }
    return ConformalPair(CurveKind::Quadratic, a, xi);
  }

  CurveKind kind() const { return kind_; }
  cplx a() const { return a_; }
  cplx xi() const { return xi_; }

 private:
  ConformalPair(CurveKind kind, cplx a, cplx xi) : kind_(kind), a_(a), xi_(xi) {}

  CurveKind kind_;
  cplx a_;
  cplx xi_;
};

struct MapValue {
  cplx z;   // psi(w)
  cplx dz;  // psi'(w)
};

inline constexpr double kDiskSlack = 1e-12;
inline constexpr double kInverseTol = 1e-13;
inline constexpr int kInverseMaxSteps = 50;

inline MapValue map_forward(const ConformalPair& pair, cplx w) {
  if (std::abs(w) > 1.0 + kDiskSlack) {
    throw std::domain_error("map_forward: |w| exceeds the closed unit disk");
  }
  if (pair.kind() == CurveKind::Disk) {
    return {pair.xi() + w, cplx(1.0, 0.0)};
  }
  const cplx a = pair.a();
  return {pair.xi() + w * (1.0 + a * w), 1.0 + 2.0 * a * w};
}

/// Inverse map phi. Newton on psi(w) = z, seeded with the quadratic root
/// on the principal branch (which is exact up to rounding).
inline cplx map_inverse(const ConformalPair& pair, cplx z) {
  const cplx zeta = z - pair.xi();
  cplx w;
  if (pair.kind() == CurveKind::Disk || pair.a() == cplx{}) {
    w = zeta;
  } else {
    const cplx a = pair.a();
    // 2 zeta / (1 + sqrt(1 + 4 a zeta)) == (-1 + sqrt(1 + 4 a zeta)) / (2a) without cancellation
    w = 2.0 * zeta / (1.0 + std::sqrt(1.0 + 4.0 * a * zeta));
    bool settled = false;
    for (int step = 0; step <= kInverseMaxSteps; ++step) {
      const cplx r = w * (1.0 + a * w) - zeta;
      if (std::abs(r) <= kInverseTol) {
        settled = true;
        break;
      }
      if (step == kInverseMaxSteps) break;
      w -= r / (1.0 + 2.0 * a * w);
    }
    if (!settled) {
      throw NonConvergence("map_inverse: Newton iteration did not converge");
    }
  }
  if (std::abs(w) > 1.0 + 1e-10) {
    throw NonConvergence("map_inverse: point lies outside the closed domain");
  }
  return w;
}

inline std::string describe(const ConformalPair& pair) {
  char buf[160];
  if (pair.kind() == CurveKind::Disk) {
    if (pair.xi() == cplx{}) return "disk";
    std::snprintf(buf, sizeof buf, "disk(xi=%.6g%+.6gi)", pair.xi().real(), pair.xi().imag());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "quadratic(a=%.6g%+.6gi xi=%.6g%+.6gi)", pair.a().real(),
                pair.a().imag(), pair.xi().real(), pair.xi().imag());
  return buf;
}

}  // namespace szego_lab
