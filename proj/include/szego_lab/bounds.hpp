#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "szego_lab/curve.hpp"
#include "szego_lab/errors.hpp"
#include "szego_lab/extremal.hpp"
#include "szego_lab/grid.hpp"
#include "szego_lab/numerics.hpp"
#include "szego_lab/szego.hpp"
#include "szego_lab/weight.hpp"

namespace szego_lab {

// ---------------------------------------------------------------------------
// Inequality records

enum class InequalityKind {
  Theorem,
  TheoremProofForm,
  Proposition,
  Corollary1,
  Corollary2,
  FejerRiesz,
  HolderStep,
  Minkowski,
};

inline const char* to_string(InequalityKind k) {
  switch (k) {
    case InequalityKind::Theorem: return "theorem";
    case InequalityKind::TheoremProofForm: return "theorem_proof_form";
    case InequalityKind::Proposition: return "proposition";
    case InequalityKind::Corollary1: return "corollary1";
    case InequalityKind::Corollary2: return "corollary2";
    case InequalityKind::FejerRiesz: return "fejer_riesz";
    case InequalityKind::HolderStep: return "holder_step";
    case InequalityKind::Minkowski: return "minkowski";
  }
  return "?";
}

inline constexpr double kTolRel = 1e-8;
inline constexpr double kTolAbs = 1e-12;

inline bool inequality_holds(double lhs, double rhs) { return lhs <= rhs * (1.0 + kTolRel) + kTolAbs; }

struct InequalityReport {
  InequalityKind kind;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool pass = false;
  std::string inputs_digest;
};

inline InequalityReport make_report(InequalityKind kind, double lhs, double rhs, std::string digest) {
  return {kind, lhs, rhs, rhs - lhs, inequality_holds(lhs, rhs), std::move(digest)};
}

// ---------------------------------------------------------------------------
// Norms

/// Discrete weighted Smirnov norm (sum |f_j|^p w_j |dt_j|)^{1/p}.
inline double lp_norm_boundary(std::span<const cplx> f, std::span<const double> weight, const BoundaryGrid& g,
                               double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm_boundary: p must be >= 1");
  if (f.size() != g.size() || weight.size() != g.size()) {
    throw std::invalid_argument("lp_norm_boundary: sample count mismatch");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) s += std::pow(std::abs(f[j]), p) * weight[j] * g.arc_element(j);
  return std::pow(s, 1.0 / p);
}

/// (int_{|u|=1} |f|^r |du|)^{1/r} from samples at the grid angles.
inline double lr_norm_circle(std::span<const cplx> f, double dtheta, double r) {
  double s = 0.0;
  for (const cplx& v : f) s += std::pow(std::abs(v), r);
  return std::pow(s * dtheta, 1.0 / r);
}

inline std::vector<double> nu_samples(const BoundaryGrid& g, double q) {
  const NuWeight nu = make_nu_weight(g.weight, q);
  std::vector<double> out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) out[j] = nu.from_rho(g.rho[j]);
  return out;
}

inline std::vector<cplx> poly_on_boundary(const ComplexPoly& Q, const BoundaryGrid& g) {
  std::vector<cplx> out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) out[j] = Q(g.t[j]);
  return out;
}

inline double conjugate_exponent(double p) { return p / (p - 1.0); }

/**
 * mu_p = ||D / D(xi)||_{L^p(G, rho)} by two routes:
 *   (i)  boundary samples of f*;
 *   (ii) |f*|^p rho |dt| = rho_hat^2 |psi'|^2 d theta / D_G(0)^p, which only uses
 *        the boundary identity |D_G|^p = rho_hat |psi'| and c_0.
 * Returns route (i); throws ConsistencyFailure if the routes differ by more than 1e-8 relative.
 */
inline double mu_p(const ConformalPair& pair, const BoundaryGrid& g, const OuterFunction& D, int p) {
  (void)pair;
  if (p < 2) throw std::invalid_argument("mu_p: p must be >= 2");
  const std::vector<cplx> f = target_samples(g, D);
  const double route1 = lp_norm_boundary(f, g.rho, g, p);
  double s = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double w = g.rho[j] * g.psi_prime_abs[j];
    s += w * w;
  }
  const double route2 = std::pow(s * g.dtheta, 1.0 / p) / D.value_at_zero();
  if (std::abs(route1 - route2) > 1e-8 * route2) {
    throw ConsistencyFailure("mu_p: boundary and closed-form routes disagree");
  }
  return route1;
}

// ---------------------------------------------------------------------------
// Constants

enum class ConstantKind { GammaLonggam, Delta, GammaPQ };

/**
 * Transplanted to the circle (|dt| = |psi'| d theta, |phi'| = 1/|psi'|):
 *   GammaLonggam = ( int |phi'|^2 / rho |dt| )^{1/2}             = ( int d theta / (rho_hat |psi'|) )^{1/2}
 *   Delta        = ( int |phi'|^{(p+q)/p} rho^{-q/p} |dt| )^{1/q}  = ( int (rho_hat |psi'|)^{-q/p} d theta )^{1/q}
 *   GammaPQ      = ( int |D|^{p(2-q)} |phi'|^{1-q} |dt| )^{1/p}    = ( int |D_G|^{p(2-q)} |psi'|^q d theta )^{1/p}
 */
inline double inequality_constants(ConstantKind kind, const BoundaryGrid& g, const OuterFunction& D, double p,
                                   double q) {
  double s = 0.0;
  switch (kind) {
    case ConstantKind::GammaLonggam:
      for (std::size_t j = 0; j < g.size(); ++j) s += 1.0 / (g.rho[j] * g.psi_prime_abs[j]);
      return std::sqrt(s * g.dtheta);
    case ConstantKind::Delta:
      if (!(p > 1.0 && q > 1.0)) throw std::invalid_argument("Delta: need p, q > 1");
      for (std::size_t j = 0; j < g.size(); ++j) s += std::pow(g.rho[j] * g.psi_prime_abs[j], -q / p);
      return std::pow(s * g.dtheta, 1.0 / q);
    case ConstantKind::GammaPQ:
      if (!(p > 1.0 && q > 1.0)) throw std::invalid_argument("GammaPQ: need p, q > 1");
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double absD = std::abs(eval_outer(D, g.u[j]));
        s += std::pow(absD, p * (2.0 - q)) * std::pow(g.psi_prime_abs[j], q);
      }
      return std::pow(s * g.dtheta, 1.0 / p);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Main inequality

enum class RhsForm { ProofForm, StatementForm, DoubleNormalized };

/**
 * ProofForm:     (m/2) (||f*||_{L^p(nu)} + ||Q||_{L^p(nu)})^{p-1}
 * StatementForm: (m/2) (GammaPQ / D(xi) + ||Q||_{L^p(nu)})^{p-1}
 * with nu = rho^{1-q}, 1/p + 1/q = 1. The two agree whenever the boundary
 * identity |D|^p |phi'| = rho holds; both are reported.
 * DoubleNormalized reads GammaPQ as ||f*||_{L^p(nu)} and still divides by D(xi):
 * (m/2) (||f*||_{L^p(nu)} / D(xi) + ||Q||_{L^p(nu)})^{p-1}. Diagnostic only.
 */
inline double theorem_rhs(const ExtremalSolution& sol, const BoundaryGrid& g, const OuterFunction& D, RhsForm form) {
  const double p = sol.p;
  const double q = conjugate_exponent(p);
  const std::vector<double> nu = nu_samples(g, q);
  const double q_norm = lp_norm_boundary(poly_on_boundary(sol.Q, g), nu, g, p);
  double first = 0.0;
  if (form == RhsForm::ProofForm) {
    first = lp_norm_boundary(target_samples(g, D), nu, g, p);
  } else if (form == RhsForm::DoubleNormalized) {
    first = lp_norm_boundary(target_samples(g, D), nu, g, p) / D.value_at_zero();
  } else {
    first = inequality_constants(ConstantKind::GammaPQ, g, D, p, q) / D.value_at_zero();
  }
  return 0.5 * sol.m * std::pow(first + q_norm, p - 1.0);
}

/**
 * Step-by-step replay of the bound for one solved instance, given the
 * lattice sup S0 of |J_n - Phi|:
 *   S0 <= S1 = 1/2 int_E |Q^p - f*^p| |dt|                     (Fejér–Riesz + t = psi(u))
 *   S1 <= S2 = m/2 || |D|^{-p} |phi'|^{-1} sum_k f*^k Q^{p-1-k} ||_{L^q(rho)}   (Hölder)
 *   S2 <= S3 = m/2 || |f*| + |Q| ||_{L^p(nu)}^{p-1}             (termwise sum bound)
 *   S3 <= S4 = proof-form right-hand side                      (Minkowski)
 * followed by the end-to-end proof-form and statement-form checks.
 */
inline std::vector<InequalityReport> theorem_chain(const ExtremalSolution& sol, const BoundaryGrid& g,
                                                   const OuterFunction& D, double lattice_sup,
                                                   const std::string& digest = {}) {
  const int p = sol.p;
  const double q = conjugate_exponent(p);
  const std::vector<cplx> f = target_samples(g, D);
  const std::vector<cplx> Qv = poly_on_boundary(sol.Q, g);
  const std::vector<double> nu = nu_samples(g, q);

  double s1 = 0.0, holder_q = 0.0;
  std::vector<cplx> sum_abs(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    cplx sum{};
    cplx fk = 1.0;
    for (int k = 0; k < p; ++k) {
      sum += fk * std::pow(Qv[j], p - 1 - k);
      fk *= f[j];
    }
    s1 += std::abs(std::pow(Qv[j], p) - std::pow(f[j], p)) * g.arc_element(j);
    const double absDp = std::exp(D.exponent(g.u[j]).real());  // |D_G|^p
    const double gj = g.psi_prime_abs[j] / absDp * std::abs(sum);
    holder_q += std::pow(gj, q) * g.rho[j] * g.arc_element(j);
    sum_abs[j] = std::abs(f[j]) + std::abs(Qv[j]);
  }
  s1 *= 0.5;
  const double s2 = 0.5 * sol.m * std::pow(holder_q, 1.0 / q);
  const double s3 = 0.5 * sol.m * std::pow(lp_norm_boundary(sum_abs, nu, g, p), p - 1.0);
  const double s4 = theorem_rhs(sol, g, D, RhsForm::ProofForm);
  const double stmt = theorem_rhs(sol, g, D, RhsForm::StatementForm);

  return {
      make_report(InequalityKind::FejerRiesz, lattice_sup, s1, digest + " step=fejer_riesz"),
      make_report(InequalityKind::HolderStep, s1, s2, digest + " step=holder"),
      make_report(InequalityKind::HolderStep, s2, s3, digest + " step=sum_bound"),
      make_report(InequalityKind::Minkowski, s3, s4, digest + " step=minkowski"),
      make_report(InequalityKind::TheoremProofForm, lattice_sup, s4, digest),
      make_report(InequalityKind::Theorem, lattice_sup, stmt, digest),
  };
}

/// Pointwise |sum_{k<p} A^k B^{p-1-k}| <= (|A| + |B|)^{p-1} at every node, A = f*, B = Q.
/// Reported at the node with the largest ratio.
inline InequalityReport holder_pointwise_check(const ExtremalSolution& sol, const BoundaryGrid& g,
                                               const OuterFunction& D) {
  const std::vector<cplx> f = target_samples(g, D);
  double worst_ratio = -1.0, lhs = 0.0, rhs = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const cplx A = f[j];
    const cplx B = sol.Q(g.t[j]);
    cplx sum{};
    cplx ak = 1.0;
    for (int k = 0; k < sol.p; ++k) {
      sum += ak * std::pow(B, sol.p - 1 - k);
      ak *= A;
    }
    const double l = std::abs(sum);
    const double r = std::pow(std::abs(A) + std::abs(B), sol.p - 1);
    const double ratio = r > 0.0 ? l / r : (l > 0.0 ? INFINITY : 0.0);
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      lhs = l;
      rhs = r;
    }
  }
  return make_report(InequalityKind::HolderStep, lhs, rhs, "pointwise sum bound");
}

inline InequalityReport minkowski_check(const ExtremalSolution& sol, const BoundaryGrid& g, const OuterFunction& D) {
  const double q = conjugate_exponent(sol.p);
  const std::vector<double> nu = nu_samples(g, q);
  const std::vector<cplx> f = target_samples(g, D);
  const std::vector<cplx> Qv = poly_on_boundary(sol.Q, g);
  std::vector<cplx> sum(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) sum[j] = std::abs(f[j]) + std::abs(Qv[j]);
  const double lhs = lp_norm_boundary(sum, nu, g, sol.p);
  const double rhs = lp_norm_boundary(f, nu, g, sol.p) + lp_norm_boundary(Qv, nu, g, sol.p);
  return make_report(InequalityKind::Minkowski, lhs, rhs, "|f*| + |Q| in L^p(nu)");
}

// ---------------------------------------------------------------------------
// Embedding inequalities on the circle

inline std::string exponent_digest(const char* name, const ComplexPoly& Q, const BoundaryGrid& g, double p, double q,
                                   double r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, " deg=%d p=%.6g q=%.6g r=%.6g M=%d", Q.degree(), p, q, r, g.M);
  return std::string(name) + " " + describe(g.pair) + " " + describe(g.weight) + buf;
}

/**
 * Proposition:  int_{|u|=1} |Q(psi(u))| |du| <= gamma ||Q||_{L^2(E,rho)}           (p = q = 2)
 * Corollary 1:  int_{|u|=1} |Q(psi(u))| |du| <= delta ||Q||_{L^p(E,rho)}           (1/p + 1/q = 1)
 * Corollary 2:  (int |Q(psi(u))|^r |du|)^{1/r} <= ||Q||_{L^p(E,rho)} C_{p,q}      (1/p + 1/q = 1/r)
 * where C_{p,q} = (int |phi'|^{1+q/p} rho^{-q/p} |dt|)^{1/q}, i.e. delta with the given p, q.
 */
inline InequalityReport check_embedding_inequality(InequalityKind kind, const ComplexPoly& Q,
                                                   const ConformalPair& pair, const BoundaryGrid& g, double p,
                                                   double q, double r = 1.0) {
  (void)pair;
  const std::vector<cplx> Qv = poly_on_boundary(Q, g);
  constexpr double kExpTol = 1e-12;
  switch (kind) {
    case InequalityKind::Proposition: {
      if (std::abs(p - 2.0) > kExpTol || std::abs(q - 2.0) > kExpTol) {
        throw ExponentMismatch("proposition requires p = q = 2");
      }
      const double lhs = lr_norm_circle(Qv, g.dtheta, 1.0);
      const double gamma = inequality_constants(ConstantKind::GammaLonggam, g, {}, 2.0, 2.0);
      const double rhs = gamma * lp_norm_boundary(Qv, g.rho, g, 2.0);
      return make_report(kind, lhs, rhs, exponent_digest("proposition", Q, g, p, q, 1.0));
    }
    case InequalityKind::Corollary1: {
      if (!(p > 1.0 && q > 1.0) || std::abs(1.0 / p + 1.0 / q - 1.0) > kExpTol) {
        throw ExponentMismatch("corollary1 requires 1/p + 1/q = 1");
      }
      const double lhs = lr_norm_circle(Qv, g.dtheta, 1.0);
      const double delta = inequality_constants(ConstantKind::Delta, g, {}, p, q);
      const double rhs = delta * lp_norm_boundary(Qv, g.rho, g, p);
      return make_report(kind, lhs, rhs, exponent_digest("corollary1", Q, g, p, q, 1.0));
    }
    case InequalityKind::Corollary2: {
      if (!(p >= 1.0 && q >= 1.0 && r >= 1.0) || std::abs(1.0 / p + 1.0 / q - 1.0 / r) > kExpTol) {
        throw ExponentMismatch("corollary2 requires 1/p + 1/q = 1/r with p, q, r >= 1");
      }
      const double lhs = lr_norm_circle(Qv, g.dtheta, r);
      double s = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) s += std::pow(g.rho[j] * g.psi_prime_abs[j], -q / p);
      const double rhs = lp_norm_boundary(Qv, g.rho, g, p) * std::pow(s * g.dtheta, 1.0 / q);
      return make_report(kind, lhs, rhs, exponent_digest("corollary2", Q, g, p, q, r));
    }
    default:
      throw std::invalid_argument("check_embedding_inequality: unsupported kind");
  }
}

/// |int_{[0,x]} h(u) du| <= int_{[0,x]} |h| |du| <= (1/2) int_{|u|=1} |h| |du|, |x| <= 1.
/// Reports the middle term against the circle term.
inline InequalityReport fejer_riesz_check(const ComplexPoly& h, cplx x, int M = 4096, int K = 256) {
  if (std::abs(x) > 1.0 + 1e-12) throw std::invalid_argument("fejer_riesz_check: |x| must be <= 1");
  const double lhs = integrate_segment_fixed([&](cplx u) { return std::abs(h(u)); }, cplx{}, x, K);
  const double dth = 2.0 * std::numbers::pi / M;
  double s = 0.0;
  for (int j = 0; j < M; ++j) s += std::abs(h(std::polar(1.0, dth * j)));
  char buf[96];
  std::snprintf(buf, sizeof buf, "fejer_riesz deg=%d x=%.6g%+.6gi", h.degree(), x.real(), x.imag());
  return make_report(InequalityKind::FejerRiesz, lhs, 0.5 * s * dth, buf);
}

}  // namespace szego_lab
