#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace szego_lab {

enum class WeightKind { Const, ExpCos, SzegoA };

/// Boundary weight rho, given as its pullback rho_hat(theta) = rho(psi(e^{i theta})).
/// Every built-in kind is strictly positive with bounded log, so the Szegő
/// condition holds on any curve of the family.
struct WeightSpec {
  WeightKind kind = WeightKind::Const;
  double c = 1.0;                // Const
  std::complex<double> a{};      // SzegoA, |a| < 1

  static WeightSpec constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("const weight needs c > 0");
    return {WeightKind::Const, c, {}};
  }
  static WeightSpec expcos() { return {WeightKind::ExpCos, 1.0, {}}; }
  static WeightSpec szego_a(std::complex<double> a) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("szego_a weight needs |a| < 1");
    return {WeightKind::SzegoA, 1.0, a};
  }
};

inline double eval_weight(const WeightSpec& spec, double theta) {
  switch (spec.kind) {
    case WeightKind::Const:
      return spec.c;
    case WeightKind::ExpCos:
      return std::exp(std::cos(theta));
    case WeightKind::SzegoA:
      return std::norm(1.0 - spec.a * std::polar(1.0, theta));
  }
  return spec.c;
}

/// Dual weight nu = rho^{1-q} for the conjugate exponent q.
class NuWeight {
 public:
  NuWeight(WeightSpec base, double q) : base_(base), q_(q) {}

  double operator()(double theta) const { return std::pow(eval_weight(base_, theta), 1.0 - q_); }
  /// Same map applied to an already sampled rho value.
  double from_rho(double rho) const { return std::pow(rho, 1.0 - q_); }

  const WeightSpec& base() const { return base_; }
  double q() const { return q_; }

 private:
  WeightSpec base_;
  double q_;
};

inline NuWeight make_nu_weight(const WeightSpec& spec, double q) {
  if (!(q > 1.0)) throw std::invalid_argument("make_nu_weight: conjugate exponent must exceed 1");
  return NuWeight(spec, q);
}

inline std::string describe(const WeightSpec& spec) {
  char buf[96];
  switch (spec.kind) {
    case WeightKind::Const:
      std::snprintf(buf, sizeof buf, "const(c=%.6g)", spec.c);
      return buf;
    case WeightKind::ExpCos:
      return "expcos";
    case WeightKind::SzegoA:
      std::snprintf(buf, sizeof buf, "szego_a(a=%.6g%+.6gi)", spec.a.real(), spec.a.imag());
      return buf;
  }
  return "?";
}

}  // namespace szego_lab
