#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "szego_lab/bounds.hpp"
#include "szego_lab/random.hpp"
#include "szego_lab/transport.hpp"

using namespace szego_lab;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

struct Problem {
  BoundaryGrid g;
  OuterFunction D;
  Problem(const ConformalPair& c, const WeightSpec& w, int p, int M = 1024)
      : g(make_boundary_grid(c, w, M)), D(build_outer(g, p, std::min(256, M / 2))) {}
};

}  // namespace

TEST(InequalityRule, Tolerances) {
  EXPECT_TRUE(inequality_holds(1.0, 1.0));
  EXPECT_TRUE(inequality_holds(1.0 + 0.9e-8, 1.0));
  EXPECT_FALSE(inequality_holds(1.0 + 1.1e-8, 1.0));
  EXPECT_TRUE(inequality_holds(0.9e-12, 0.0));
  EXPECT_FALSE(inequality_holds(1.1e-12, 0.0));
  const InequalityReport r = make_report(InequalityKind::Theorem, 1.0, 3.0, "x");
  EXPECT_DOUBLE_EQ(r.slack, 2.0);
  EXPECT_TRUE(r.pass);
}

TEST(LpNormBoundary, Examples) {
  Problem s(ConformalPair::disk(), WeightSpec::constant(1.0), 2);
  const std::vector<cplx> one(s.g.size(), 1.0);
  EXPECT_NEAR(lp_norm_boundary(one, s.g.rho, s.g, 2.0), std::sqrt(kTwoPi), 1e-13);
  EXPECT_NEAR(lp_norm_boundary(s.g.t, s.g.rho, s.g, 4.0), std::pow(kTwoPi, 0.25), 1e-13);
  EXPECT_THROW(lp_norm_boundary(one, s.g.rho, s.g, 0.5), std::invalid_argument);

  Problem e(ConformalPair::disk(), WeightSpec::expcos(), 2);
  EXPECT_NEAR(lp_norm_boundary(target_samples(e.g, e.D), e.g.rho, e.g, 2.0), mu_p(e.g.pair, e.g, e.D, 2), 1e-10);
}

TEST(MuP, Examples) {
  Problem one(ConformalPair::disk(), WeightSpec::constant(1.0), 2);
  EXPECT_NEAR(mu_p(one.g.pair, one.g, one.D, 2), std::sqrt(kTwoPi), 1e-13);

  Problem e(ConformalPair::disk(), WeightSpec::expcos(), 2);
  EXPECT_NEAR(mu_p(e.g.pair, e.g, e.D, 2), std::sqrt(kTwoPi * oracle::bessel_i0(2.0)), 1e-12);
  EXPECT_NEAR(mu_p(e.g.pair, e.g, e.D, 2), 3.78458146670150481, 1e-12);

  Problem a(ConformalPair::disk(), WeightSpec::szego_a(0.5), 2);
  const double ref = std::sqrt(oracle::periodic_quad([](double t) { return std::pow(std::norm(1.0 - 0.5 * std::polar(1.0, t)), 2); }));
  EXPECT_NEAR(mu_p(a.g.pair, a.g, a.D, 2), ref, 1e-12);
}

TEST(MuP, RoutesAgreeOnQuadraticCurve) {
  for (int p : {2, 3, 4}) {
    Problem s(ConformalPair::quadratic(cplx(0.2, 0.1), cplx(0.1, 0.0)), WeightSpec::szego_a(cplx(0.3, 0.3)), p);
    EXPECT_NO_THROW(mu_p(s.g.pair, s.g, s.D, p));
  }
}

TEST(MuP, DetectsInconsistentOuterFunction) {
  Problem s(ConformalPair::disk(), WeightSpec::expcos(), 2);
  OuterFunction bad = s.D;
  bad.c[1] *= 1.5;
  EXPECT_THROW(mu_p(s.g.pair, s.g, bad, 2), ConsistencyFailure);
}

TEST(Constants, DiskConstantWeight) {
  Problem s(ConformalPair::disk(), WeightSpec::constant(1.0), 2);
  const double r = std::sqrt(kTwoPi);
  EXPECT_NEAR(inequality_constants(ConstantKind::GammaLonggam, s.g, s.D, 2, 2), r, 1e-13);
  EXPECT_NEAR(inequality_constants(ConstantKind::Delta, s.g, s.D, 2, 2), r, 1e-13);
  EXPECT_NEAR(inequality_constants(ConstantKind::GammaPQ, s.g, s.D, 2, 2), r, 1e-13);
}

TEST(Constants, DeltaEqualsGammaAtTwo) {
  for (const auto& pair : {ConformalPair::disk(), ConformalPair::quadratic(cplx(0.2, 0.1))}) {
    for (const auto& w : {WeightSpec::constant(3.0), WeightSpec::expcos(), WeightSpec::szego_a(0.5)}) {
      Problem s(pair, w, 2);
      const double g = inequality_constants(ConstantKind::GammaLonggam, s.g, s.D, 2, 2);
      const double d = inequality_constants(ConstantKind::Delta, s.g, s.D, 2, 2);
      EXPECT_LE(std::abs(g - d), 1e-12 * g);
    }
  }
}

TEST(Constants, TransplantationMatchesDirectArcSampling) {
  // Same integrals written on E: |phi'| = 1/|psi'| and |dt| taken from the grid arc elements.
  Problem s(ConformalPair::quadratic(cplx(0.2, 0.1)), WeightSpec::expcos(), 3);
  const double p = 3, q = 1.5;
  double sg = 0, sd = 0, sgpq = 0;
  for (std::size_t j = 0; j < s.g.size(); ++j) {
    const double dphi = 1.0 / s.g.psi_prime_abs[j];
    const double dt = s.g.arc_element(j);
    const double absD = std::abs(eval_outer(s.D, s.g.u[j]));
    sg += dphi * dphi / s.g.rho[j] * dt;
    sd += std::pow(dphi, (p + q) / p) * std::pow(s.g.rho[j], -q / p) * dt;
    sgpq += std::pow(absD, p * (2 - q)) * std::pow(dphi, 1 - q) * dt;
  }
  EXPECT_NEAR(inequality_constants(ConstantKind::GammaLonggam, s.g, s.D, p, q), std::sqrt(sg), 1e-12);
  EXPECT_NEAR(inequality_constants(ConstantKind::Delta, s.g, s.D, p, q), std::pow(sd, 1 / q), 1e-12);
  EXPECT_NEAR(inequality_constants(ConstantKind::GammaPQ, s.g, s.D, p, q), std::pow(sgpq, 1 / p), 1e-12);
}

TEST(Constants, GammaPQOverD0IsTargetNuNorm) {
  for (int p : {2, 3, 4}) {
    Problem s(ConformalPair::quadratic(cplx(0.2, 0.1)), WeightSpec::szego_a(0.5), p);
    const double q = conjugate_exponent(p);
    const double a = inequality_constants(ConstantKind::GammaPQ, s.g, s.D, p, q) / s.D.value_at_zero();
    const double b = lp_norm_boundary(target_samples(s.g, s.D), nu_samples(s.g, q), s.g, p);
    EXPECT_LE(std::abs(a - b), 1e-9 * b);
  }
}

TEST(TheoremRhs, ExactRepresentationGivesZero) {
  Problem s(ConformalPair::disk(), WeightSpec::constant(1.0), 2);
  const ExtremalSolution sol = solve_extremal(s.g.pair, s.g, s.D, 3, 2);
  EXPECT_LE(theorem_rhs(sol, s.g, s.D, RhsForm::ProofForm), 1e-12);
  EXPECT_LE(theorem_rhs(sol, s.g, s.D, RhsForm::StatementForm), 1e-12);
}

TEST(TheoremRhs, ExpCosDegreeZeroByQuadrature) {
  Problem s(ConformalPair::disk(), WeightSpec::expcos(), 2);
  const ExtremalSolution sol = solve_extremal(s.g.pair, s.g, s.D, 0, 2);
  // nu = rho^{-1} = e^{-cos}, f* = e^{z/2}: ||f*||_nu^2 = int e^{cos} e^{-cos} = 2 pi,
  // ||1||_nu^2 = 2 pi I0(1); m_0^2 = int |e^{u/2} - 1|^2 e^{cos} d theta.
  const double m0 = std::sqrt(oracle::periodic_quad([](double t) {
    return std::norm(std::exp(0.5 * std::polar(1.0, t)) - 1.0) * std::exp(std::cos(t));
  }));
  const double ref = 0.5 * m0 * (std::sqrt(kTwoPi) + std::sqrt(kTwoPi * oracle::bessel_i0(1.0)));
  EXPECT_NEAR(sol.m, m0, 1e-12);
  EXPECT_NEAR(theorem_rhs(sol, s.g, s.D, RhsForm::ProofForm), ref, 1e-11);
  EXPECT_NEAR(theorem_rhs(sol, s.g, s.D, RhsForm::StatementForm), ref, 1e-9);
  const TransportPair T = make_transport(s.g.pair, s.D, sol.Q);
  EXPECT_LE(sup_diff_on_compact(s.g.pair, T, 0.95), ref);
}

TEST(TheoremChain, EveryStepHolds) {
  struct Case {
    ConformalPair c;
    WeightSpec w;
    int p;
  };
  const std::vector<Case> cases = {
      {ConformalPair::disk(), WeightSpec::expcos(), 2},
      {ConformalPair::disk(), WeightSpec::expcos(), 4},
      {ConformalPair::quadratic(cplx(0.2, 0.1)), WeightSpec::szego_a(0.5), 3},
      {ConformalPair::quadratic(cplx(0.2, 0.1)), WeightSpec::constant(1.0), 2},
  };
  for (const auto& cs : cases) {
    Problem s(cs.c, cs.w, cs.p);
    const CompactLattice L = make_compact_lattice(cs.c, s.D, 0.95, 4, 128);
    for (int n : {0, 2, 5}) {
      const ExtremalSolution sol = solve_extremal(cs.c, s.g, s.D, n, cs.p);
      const auto chain = theorem_chain(sol, s.g, s.D, sup_diff_on_lattice(L, compute_Jn(sol.Q, cs.p, cs.c.xi())));
      ASSERT_EQ(chain.size(), 6u);
      for (const auto& r : chain) {
        EXPECT_TRUE(r.pass) << to_string(r.kind) << " " << describe(cs.c) << " " << describe(cs.w) << " n=" << n
                            << " lhs=" << r.lhs << " rhs=" << r.rhs;
        EXPECT_GE(r.lhs, 0.0);
        EXPECT_GE(r.rhs, 0.0);
      }
      EXPECT_TRUE(holder_pointwise_check(sol, s.g, s.D).pass);
      EXPECT_TRUE(minkowski_check(sol, s.g, s.D).pass);
    }
  }
}

TEST(TheoremChain, VerdictsStableUnderRefinement) {
  for (int M : {1024, 2048}) {
    Problem s(ConformalPair::quadratic(cplx(0.2, 0.1)), WeightSpec::expcos(), 3, M);
    const CompactLattice L = make_compact_lattice(s.g.pair, s.D, 0.95, 4, 128);
    for (int n : {1, 4}) {
      const ExtremalSolution sol = solve_extremal(s.g.pair, s.g, s.D, n, 3);
      for (const auto& r : theorem_chain(sol, s.g, s.D, sup_diff_on_lattice(L, compute_Jn(sol.Q, 3, 0.0))))
        EXPECT_TRUE(r.pass) << "M=" << M << " " << to_string(r.kind);
    }
  }
}

TEST(Embedding, EqualityProbes) {
  Problem s(ConformalPair::disk(), WeightSpec::constant(1.0), 2);
  for (const ComplexPoly& Q : {ComplexPoly::constant(1.0), ComplexPoly{0.0, 1.0}}) {
    const auto prop = check_embedding_inequality(InequalityKind::Proposition, Q, s.g.pair, s.g, 2, 2);
    EXPECT_NEAR(prop.lhs, kTwoPi, 1e-12);
    EXPECT_NEAR(prop.rhs, kTwoPi, 1e-12);
    EXPECT_LE(std::abs(prop.slack), 1e-10);
    const auto c1 = check_embedding_inequality(InequalityKind::Corollary1, Q, s.g.pair, s.g, 3, 1.5);
    EXPECT_LE(std::abs(c1.slack), 1e-10);
    const auto c2 = check_embedding_inequality(InequalityKind::Corollary2, Q, s.g.pair, s.g, 4, 4, 2);
    EXPECT_LE(std::abs(c2.slack), 1e-10);
  }
}

TEST(Embedding, ExponentMismatch) {
  Problem s(ConformalPair::disk(), WeightSpec::constant(1.0), 2);
  const ComplexPoly Q{1.0, 2.0};
  EXPECT_THROW(check_embedding_inequality(InequalityKind::Proposition, Q, s.g.pair, s.g, 3, 1.5), ExponentMismatch);
  EXPECT_THROW(check_embedding_inequality(InequalityKind::Corollary1, Q, s.g.pair, s.g, 2, 3), ExponentMismatch);
  EXPECT_THROW(check_embedding_inequality(InequalityKind::Corollary2, Q, s.g.pair, s.g, 2, 2, 2), ExponentMismatch);
  EXPECT_THROW(check_embedding_inequality(InequalityKind::Corollary2, Q, s.g.pair, s.g, 0.5, 2, 0.4), ExponentMismatch);
  EXPECT_NO_THROW(check_embedding_inequality(InequalityKind::Corollary2, Q, s.g.pair, s.g, 3, 6, 2));
}

TEST(Embedding, RandomDegreeTenOnQuadraticCurve) {
  Problem s(ConformalPair::quadratic(cplx(0.2, 0.1)), WeightSpec::expcos(), 2, 4096);
  Xorshift64Star rng(2024);
  for (int t = 0; t < 200; ++t) {
    std::vector<cplx> c(11);
    for (auto& v : c) v = rng.complex_normal();
    const auto r = check_embedding_inequality(InequalityKind::Corollary2, ComplexPoly(c), s.g.pair, s.g, 2, 2, 1);
    EXPECT_GE(r.slack, 0.0) << t;
  }
}

TEST(FejerRiesz, Examples) {
  const auto one = fejer_riesz_check(ComplexPoly::constant(1.0), 1.0);
  EXPECT_NEAR(one.lhs, 1.0, 1e-14);
  EXPECT_NEAR(one.rhs, std::numbers::pi, 1e-13);
  EXPECT_TRUE(one.pass);
  for (int k : {1, 3, 10, 20}) {
    std::vector<cplx> c(k + 1);
    c[k] = 1.0;
    const auto r = fejer_riesz_check(ComplexPoly(c), 1.0);
    EXPECT_NEAR(r.lhs, 1.0 / (k + 1), 1e-14);
    EXPECT_NEAR(r.rhs, std::numbers::pi, 1e-13);
  }
  EXPECT_THROW(fejer_riesz_check(ComplexPoly::constant(1.0), 1.5), std::invalid_argument);
}

TEST(FejerRiesz, RandomTrials) {
  Xorshift64Star rng(99);
  for (int t = 0; t < 500; ++t) {
    const ComplexPoly h = random_poly(rng);
    const cplx x = random_disk_point(rng);
    const auto r = fejer_riesz_check(h, x);
    EXPECT_GE(r.slack, -1e-12) << t;
  }
}
