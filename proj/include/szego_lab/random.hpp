#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "szego_lab/numerics.hpp"

namespace szego_lab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// xorshift64* generator. Distributions are implemented here rather than
/// taken from <random> so sequences are identical across standard libraries.
class Xorshift64Star {
 public:
  using result_type = std::uint64_t;

  explicit Xorshift64Star(std::uint64_t seed) : s_(splitmix64(seed)) {
    if (s_ == 0) s_ = 0x2545F4914F6CDD1Dull;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545F4914F6CDD1Dull;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) { return lo + static_cast<int>((*this)() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// Standard normal via Box–Muller (one draw per call).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Standard complex normal: E|z|^2 = 1.
  std::complex<double> complex_normal() { return std::complex<double>(normal(), normal()) / std::numbers::sqrt2; }

 private:
  std::uint64_t s_;
};

/// Degree uniform in [0, max_degree], i.i.d. standard complex normal coefficients.
inline ComplexPoly random_poly(Xorshift64Star& rng, int max_degree = 20) {
  const int deg = rng.uniform_int(0, max_degree);
  std::vector<std::complex<double>> c(deg + 1);
  for (auto& v : c) v = rng.complex_normal();
  return ComplexPoly(std::move(c));
}

/// Uniform point in the closed unit disk.
inline std::complex<double> random_disk_point(Xorshift64Star& rng) {
  const double r = std::sqrt(rng.uniform());
  return std::polar(r, 2.0 * std::numbers::pi * rng.uniform());
}

}  // namespace szego_lab
