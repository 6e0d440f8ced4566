#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "szego_lab/curve.hpp"
#include "szego_lab/errors.hpp"
#include "szego_lab/grid.hpp"
#include "szego_lab/numerics.hpp"
#include "szego_lab/szego.hpp"

namespace szego_lab {

struct ExtremalSolution {
  int n = 0;
  int p = 2;
  ComplexPoly Q;        // Q(xi) = 1
  double m = 0.0;       // attained discrete L^p(G, rho) distance to f*
  int iterations = 0;
  bool converged = true;
  bool orthogonalized = false;
  std::vector<double> objective_history;  // sum |f* - Q|^p rho |dt|, nonincreasing
};

struct ExtremalOptions {
  double eps_irls = 1e-10;
  int max_iterations = 200;
  double rel_tol = 1e-12;
  double cond_limit = 1e12;
};

namespace detail {

using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

// Columns (t - xi) t^k, k = 0..n-1, sampled on the boundary grid.
inline MatrixC constrained_basis(const BoundaryGrid& g, int n) {
  const int M = g.M;
  MatrixC B(M, n);
  const cplx xi = g.pair.xi();
  for (int j = 0; j < M; ++j) {
    cplx col = g.t[j] - xi;
    for (int k = 0; k < n; ++k) {
      B(j, k) = col;
      col *= g.t[j];
    }
  }
  return B;
}

inline std::vector<double> arc_weights(const BoundaryGrid& g) {
  std::vector<double> w(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) w[j] = g.rho[j] * g.arc_element(j);
  return w;
}

// Q(z) = 1 + (z - xi) sum r_k z^k expanded to monomial coefficients.
inline ComplexPoly expand_constrained(const VectorC& r, cplx xi) {
  const int n = static_cast<int>(r.size());
  std::vector<cplx> q(n + 1);
  q[0] = 1.0;
  for (int k = 0; k < n; ++k) {
    q[k + 1] += r(k);
    q[k] -= xi * r(k);
  }
  return ComplexPoly(std::move(q));
}

inline double objective(const VectorC& e, const std::vector<double>& w, double p) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < e.size(); ++j) s += std::pow(std::abs(e(j)), p) * w[j];
  return s;
}

// Weighted least squares min sum omega_j |y_j - (B r)_j|^2.
// Householder QR with column pivoting; when |R_00| / |R_nn| exceeds the limit
// the basis is orthonormalized on the grid (two-pass modified Gram–Schmidt in
// the base inner product) and the solve runs in those coordinates.
class WeightedLeastSquares {
 public:
  WeightedLeastSquares(const MatrixC& B, const std::vector<double>& base, double cond_limit)
      : B_(B), base_(base) {
    const Eigen::Index M = B.rows(), n = B.cols();
    MatrixC A(M, n);
    for (Eigen::Index j = 0; j < M; ++j) A.row(j) = std::sqrt(base[j]) * B.row(j);
    Eigen::ColPivHouseholderQR<MatrixC> qr(A);
    const auto R = qr.matrixQR().diagonal();
    const double rmax = std::abs(R(0));
    const double rmin = std::abs(R(n - 1));
    condition_ = rmin > 0.0 ? rmax / rmin : INFINITY;
    if (condition_ > cond_limit) orthogonalize(A);
  }

  bool orthogonalized() const { return orthogonalized_; }
  double condition() const { return condition_; }

  VectorC solve(const std::vector<double>& omega, const VectorC& y) const {
    const Eigen::Index M = B_.rows();
    const MatrixC& basis = orthogonalized_ ? V_ : B_;
    MatrixC A(M, basis.cols());
    VectorC b(M);
    for (Eigen::Index j = 0; j < M; ++j) {
      const double s = std::sqrt(omega[j]);
      A.row(j) = s * basis.row(j);
      b(j) = s * y(j);
    }
    VectorC s = A.colPivHouseholderQr().solve(b);
    if (!orthogonalized_) return s;
    // V = B T^{-1}  =>  B r = V s with r = T^{-1} s
    return T_.triangularView<Eigen::Upper>().solve(s);
  }

 private:
  void orthogonalize(const MatrixC& A) {
    const Eigen::Index M = A.rows(), n = A.cols();
    MatrixC Qw = A;  // weighted columns
    T_ = MatrixC::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index i = 0; i < k; ++i) {
          const cplx h = Qw.col(i).dot(Qw.col(k));
          Qw.col(k) -= h * Qw.col(i);
          T_(i, k) += h;
        }
      }
      const double nrm = Qw.col(k).norm();
      if (nrm == 0.0) throw IllConditioned("extremal: basis is numerically rank deficient");
      Qw.col(k) /= nrm;
      T_(k, k) = nrm;
    }
    V_.resize(M, n);
    for (Eigen::Index j = 0; j < M; ++j) V_.row(j) = Qw.row(j) / std::sqrt(base_[j]);
    orthogonalized_ = true;
  }

  MatrixC B_;
  std::vector<double> base_;
  MatrixC V_;
  MatrixC T_;
  double condition_ = 1.0;
  bool orthogonalized_ = false;
};

}  // namespace detail

/// Boundary samples of the normalized target f* = D / D(xi).
inline std::vector<cplx> target_samples(const BoundaryGrid& g, const OuterFunction& D) {
  std::vector<cplx> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = eval_target_disk(D, g.u[j]);
  return f;
}

/**
 * Best L^p(G, rho) approximation of f* by polynomials of degree <= n with
 * Q(xi) = 1. The constraint is eliminated through Q = 1 + (z - xi) R(z);
 * the coefficients of R come from iteratively reweighted least squares with
 * node weights max(|e_j|, eps)^{p-2} rho_j |dt_j|. Each IRLS candidate is
 * accepted along the segment from the current iterate at the best of the
 * steps {1, 2/p, 1/(p-1)} (then halving), so the objective never increases.
 */
inline ExtremalSolution solve_extremal(const ConformalPair& pair, const BoundaryGrid& g,
                                       const OuterFunction& D, int n, int p,
                                       const ExtremalOptions& opt = {}) {
  if (n < 0) throw std::invalid_argument("solve_extremal: n must be >= 0");
  if (p < 2) throw std::invalid_argument("solve_extremal: p must be an integer >= 2");
  (void)pair;

  const int M = g.M;
  const std::vector<double> base = detail::arc_weights(g);
  const std::vector<cplx> fstar = target_samples(g, D);
  detail::VectorC y(M);
  for (int j = 0; j < M; ++j) y(j) = fstar[j] - 1.0;

  ExtremalSolution sol;
  sol.n = n;
  sol.p = p;
  const double F0 = detail::objective(y, base, p);
  sol.objective_history.push_back(F0);

  if (n == 0) {
    sol.Q = ComplexPoly::constant(1.0);
    sol.m = std::pow(F0, 1.0 / p);
    return sol;
  }

  const detail::MatrixC B = detail::constrained_basis(g, n);
  const detail::WeightedLeastSquares ls(B, base, opt.cond_limit);
  sol.orthogonalized = ls.orthogonalized();

  detail::VectorC r = ls.solve(base, y);
  detail::VectorC e = y - B * r;
  double F = detail::objective(e, base, p);
  sol.iterations = 1;
  if (F <= F0) {
    sol.objective_history.push_back(F);
  } else {
    r.setZero();
    e = y;
    F = F0;
  }

  if (p > 2) {
    sol.converged = false;
    std::vector<double> omega(M);
    for (int it = 0; it < opt.max_iterations; ++it) {
      if (F == 0.0) {
        sol.converged = true;
        break;
      }
      for (int j = 0; j < M; ++j) omega[j] = std::pow(std::max(std::abs(e(j)), opt.eps_irls), p - 2) * base[j];
      const detail::VectorC cand = ls.solve(omega, y);
      const detail::VectorC dir = cand - r;
      ++sol.iterations;

      double best_F = F;
      double best_s = 0.0;
      for (double s : {1.0, 2.0 / p, 1.0 / (p - 1.0)}) {
        const double Fs = detail::objective(y - B * (r + s * dir), base, p);
        if (Fs < best_F) {
          best_F = Fs;
          best_s = s;
        }
      }
      for (double s = 0.5 / (p - 1.0); best_s == 0.0 && s > 1e-9; s *= 0.5) {
        const double Fs = detail::objective(y - B * (r + s * dir), base, p);
        if (Fs < best_F) {
          best_F = Fs;
          best_s = s;
        }
      }
      if (best_s == 0.0) {  // no descent left at working precision
        sol.converged = true;
        break;
      }
      r += best_s * dir;
      e = y - B * r;
      const double rel = (F - best_F) / F;
      F = best_F;
      sol.objective_history.push_back(F);
      if (rel < opt.rel_tol) {
        sol.converged = true;
        break;
      }
    }
  }

  sol.Q = detail::expand_constrained(r, g.pair.xi());
  sol.m = std::pow(F, 1.0 / p);
  return sol;
}

/**
 * Independent p = 2 route: weighted normal equations in the same
 * (z - xi) z^k basis, solved by Cholesky. Throws IllConditioned when the
 * Gram matrix condition number exceeds 1e12.
 */
inline ComplexPoly ls_oracle_p2(const ConformalPair& pair, const BoundaryGrid& g,
                                std::span<const cplx> target, int n) {
  if (n < 1) throw std::invalid_argument("ls_oracle_p2: n must be >= 1");
  if (static_cast<int>(target.size()) != g.M) throw std::invalid_argument("ls_oracle_p2: sample count mismatch");
  const detail::MatrixC B = detail::constrained_basis(g, n);
  const std::vector<double> w = detail::arc_weights(g);

  detail::MatrixC G = detail::MatrixC::Zero(n, n);
  detail::VectorC h = detail::VectorC::Zero(n);
  for (int j = 0; j < g.M; ++j) {
    const cplx yj = target[j] - 1.0;
    for (int a = 0; a < n; ++a) {
      const cplx ba = std::conj(B(j, a)) * w[j];
      h(a) += ba * yj;
      for (int b = 0; b < n; ++b) G(a, b) += ba * B(j, b);
    }
  }
  Eigen::SelfAdjointEigenSolver<detail::MatrixC> eig(G, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  if (!(ev(0) > 0.0) || ev(n - 1) / ev(0) > 1e12) {
    throw IllConditioned("ls_oracle_p2: Gram matrix condition number exceeds 1e12");
  }
  const detail::VectorC r = G.llt().solve(h);
  return detail::expand_constrained(r, pair.xi());
}

}  // namespace szego_lab
