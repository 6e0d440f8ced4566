#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "szego_lab/errors.hpp"

namespace szego_lab {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Complex polynomials in ascending coefficient order.

class ComplexPoly {
 public:
  static constexpr double kTrim = 1e-300;

  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }
  ComplexPoly(std::initializer_list<cplx> coeffs) : c_(coeffs) { trim(); }

  static ComplexPoly constant(cplx v) { return ComplexPoly({v}); }

  const std::vector<cplx>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  cplx operator[](std::size_t k) const { return k < c_.size() ? c_[k] : cplx{}; }

  cplx operator()(cplx z) const {
    cplx acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && std::abs(c_.back()) <= kTrim) c_.pop_back();
  }

  std::vector<cplx> c_;
};

inline cplx poly_eval(const ComplexPoly& P, cplx z) { return P(z); }

inline ComplexPoly poly_multiply(const ComplexPoly& A, const ComplexPoly& B) {
  if (A.is_zero() || B.is_zero()) return {};
  const auto& a = A.coeffs();
  const auto& b = B.coeffs();
  std::vector<cplx> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return ComplexPoly(std::move(out));
}

/// P^p by repeated convolution; p = 0 yields the constant 1.
inline ComplexPoly poly_pow(const ComplexPoly& P, int p) {
  if (p < 0) throw std::invalid_argument("poly_pow: negative exponent");
  ComplexPoly acc = ComplexPoly::constant(1.0);
  for (int k = 0; k < p; ++k) acc = poly_multiply(acc, P);
  return acc;
}

/// Antiderivative vanishing at 0.
inline ComplexPoly poly_antiderivative(const ComplexPoly& P) {
  if (P.is_zero()) return {};
  const auto& c = P.coeffs();
  std::vector<cplx> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / static_cast<double>(k + 1);
  return ComplexPoly(std::move(out));
}

inline ComplexPoly poly_derivative(const ComplexPoly& P) {
  const auto& c = P.coeffs();
  if (c.size() <= 1) return {};
  std::vector<cplx> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<double>(k);
  return ComplexPoly(std::move(out));
}

inline ComplexPoly poly_add_constant(ComplexPoly P, cplx v) {
  std::vector<cplx> c = P.coeffs();
  if (c.empty()) c.push_back(0.0);
  c[0] += v;
  return ComplexPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Quadrature.

/// Rectangle rule over one full period; spectrally accurate for smooth periodic data.
template <typename T>
T integrate_periodic(std::span<const T> samples, double dtheta) {
  T s{};
  for (const T& v : samples) s += v;
  return s * dtheta;
}

inline cplx integrate_periodic(const std::vector<cplx>& samples, double dtheta) {
  return integrate_periodic<cplx>(std::span<const cplx>(samples), dtheta);
}

inline double integrate_periodic(const std::vector<double>& samples, double dtheta) {
  return integrate_periodic<double>(std::span<const double>(samples), dtheta);
}

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

namespace detail {
// (P_K(x), P_{K-1}(x)) by the three-term recurrence.
inline std::pair<double, double> legendre_pair(int K, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= K; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}
}  // namespace detail

inline GaussLegendreRule compute_gauss_legendre(int K) {
  if (K < 1) throw std::invalid_argument("gauss_legendre: K must be positive");
  GaussLegendreRule rule{std::vector<double>(K), std::vector<double>(K)};
  for (int i = 0; i < (K + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (K + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [pk, pkm1] = detail::legendre_pair(K, x);
      const double dx = pk / (K * (x * pk - pkm1) / (x * x - 1.0));
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [pk, pkm1] = detail::legendre_pair(K, x);
    const double dp = K * (x * pk - pkm1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[K - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[K - 1 - i] = w;
  }
  if (K % 2 == 1) rule.nodes[K / 2] = 0.0;
  return rule;
}

/// Cached K-point rule; thread-safe.
inline const GaussLegendreRule& gauss_legendre(int K) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(K);
  if (it == cache.end()) it = cache.emplace(K, compute_gauss_legendre(K)).first;
  return it->second;
}

/// Single K-point Gauss–Legendre pass of int_{[z0,z1]} f(u) du. Works for
/// complex- or real-valued f; real f integrates against |du|.
template <typename F>
auto integrate_segment_fixed(F&& f, cplx z0, cplx z1, int K) {
  const GaussLegendreRule& rule = gauss_legendre(K);
  const cplx mid = 0.5 * (z0 + z1);
  const cplx half = 0.5 * (z1 - z0);
  using R = decltype(f(mid));
  R acc{};
  for (int k = 0; k < K; ++k) acc += rule.weights[k] * f(mid + half * rule.nodes[k]);
  if constexpr (std::is_same_v<R, double>) {
    return acc * std::abs(half);
  } else {
    return acc * half;
  }
}

/// Contour integral over the straight segment [z0, z1]. Accepts the value
/// once doubling K moves it by <= 1e-12 (relative to max(1, |I|)); a second
/// doubling is tried at 1e-10 before giving up.
template <typename F>
cplx integrate_segment(F&& f, cplx z0, cplx z1, int K = 64) {
  if (K < 16) throw std::invalid_argument("integrate_segment: K must be >= 16");
  const cplx i1 = integrate_segment_fixed(f, z0, z1, K);
  const cplx i2 = integrate_segment_fixed(f, z0, z1, 2 * K);
  if (std::abs(i2 - i1) <= 1e-12 * std::max(1.0, std::abs(i2))) return i2;
  const cplx i4 = integrate_segment_fixed(f, z0, z1, 4 * K);
  if (std::abs(i4 - i2) <= 1e-10 * std::max(1.0, std::abs(i4))) return i4;
  throw NonConvergence("integrate_segment: node doubling did not stabilize");
}

}  // namespace szego_lab
