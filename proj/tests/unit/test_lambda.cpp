#include <cmath>

#include <gtest/gtest.h>

#include "fracpos/cones.hpp"
#include "fracpos/errors.hpp"
#include "fracpos/random.hpp"

namespace fracpos {
namespace {

HermitianOperator random_w(int d, Rng& rng) {
  return HermitianOperator(BipartiteDims::square(d), random_hermitian(d * d, rng));
}

double op_norm(const ComplexMatrix& x) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(x, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().cwiseAbs().maxCoeff();
}

TEST(LambdaNumeric, DepolarizingExample) {
  const auto level = FractionalLevel::make(1.5, 2);
  const auto est = lambda_numeric(choi_depolarizing(2, 0.7), level);
  EXPECT_NEAR(est.value, -0.26, 1e-6);
  EXPECT_LE(est.feasibility_residual, kMaxResidual);
  EXPECT_TRUE(is_admissible_vector(est.argmin, level).admissible);
  EXPECT_NEAR(quadratic_form(choi_depolarizing(2, 0.7).mat, est.argmin), est.value, 1e-12);
}

TEST(LambdaNumeric, IdentityIsOne) {
  for (int d = 2; d <= 3; ++d) {
    const auto est = lambda_numeric(HermitianOperator(BipartiteDims::square(d),
                                                      ComplexMatrix::Identity(d * d, d * d)),
                                    FractionalLevel::make(1.5, d));
    EXPECT_NEAR(est.value, 1.0, 1e-14);
  }
}

TEST(LambdaNumeric, NegativeProjectorGivesMinusMu) {
  for (int d = 2; d <= 3; ++d) {
    const ComplexVector omega = BipartiteVector::omega(BipartiteDims::square(d)).coeffs();
    const HermitianOperator w(BipartiteDims::square(d), -omega * omega.adjoint());
    for (double alpha : {1.0, 1.4, 2.0, 2.5}) {
      if (alpha > d) continue;
      const auto level = FractionalLevel::make(alpha, d);
      EXPECT_NEAR(lambda_numeric(w, level).value, -mu_alpha_pomega(d, level), 1e-6);
      const HermitianOperator p(BipartiteDims::square(d), omega * omega.adjoint());
      EXPECT_NEAR(mu_numeric(p, level).value, mu_alpha_pomega(d, level), 1e-6);
    }
  }
}

TEST(LambdaNumeric, RectangularOperator) {
  Rng rng(1);
  const BipartiteDims dims(2, 3);
  const HermitianOperator w(dims, random_hermitian(6, rng));
  const auto level = FractionalLevel::integer(2, 2);
  // alpha = d admits every unit vector: the minimum eigenvalue.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(w.mat);
  EXPECT_NEAR(lambda_numeric(w, level).value, eig.eigenvalues()(0), 1e-9);
}

TEST(LambdaNumeric, Errors) {
  const auto level = FractionalLevel::make(1.5, 2);
  OptimizerConfig cfg;
  cfg.starts = 0;
  EXPECT_THROW(lambda_numeric(choi_depolarizing(2, 0.5), level, cfg), DomainError);
  EXPECT_THROW(lambda_numeric(choi_depolarizing(3, 0.5), level), ShapeError);
  ComplexMatrix bad = ComplexMatrix::Zero(4, 4);
  bad(0, 1) = 1.0;
  EXPECT_THROW(lambda_numeric(HermitianOperator({2, 2}, bad), level), DomainError);
}

TEST(LambdaNumeric, DeterministicAndThreadIndependent) {
  Rng rng(7);
  const auto w = random_w(3, rng);
  const auto level = FractionalLevel::make(2.3, 3);
  OptimizerConfig cfg;
  cfg.starts = 16;
  const auto a = lambda_numeric(w, level, cfg);
  const auto b = lambda_numeric(w, level, cfg);
  cfg.threads = 4;
  const auto c = lambda_numeric(w, level, cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, c.value);
  EXPECT_EQ(a.best_start, c.best_start);
  EXPECT_EQ(a.argmin.coeffs(), c.argmin.coeffs());
}

TEST(LambdaNumeric, WarmStartsNeverHurt) {
  Rng rng(8);
  const auto w = random_w(3, rng);
  const auto level = FractionalLevel::make(1.7, 3);
  OptimizerConfig cfg;
  cfg.starts = 4;
  const auto cold = lambda_numeric(w, level, cfg);
  cfg.warm_starts.push_back(cold.argmin);
  const auto warm = lambda_numeric(w, level, cfg);
  EXPECT_LE(warm.value, cold.value + 1e-15);
  EXPECT_EQ(warm.starts_used, cold.starts_used + 1);
}

// Property probes on estimator outputs.

TEST(LambdaProperties, MonotoneInAlpha) {
  Rng rng(501);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 2;
    const auto w = random_w(d, rng);
    double previous = 1e300;
    OptimizerConfig cfg;
    cfg.starts = 16;
    for (int i = 0; i <= 8; ++i) {
      const auto level = FractionalLevel::make(1.0 + (d - 1) * i / 8.0, d);
      const auto est = lambda_numeric(w, level, cfg);
      EXPECT_LE(est.value, previous + 1e-12);
      previous = est.value;
      // Optima at smaller levels stay feasible at larger ones.
      cfg.warm_starts.push_back(est.argmin);
    }
  }
}

TEST(LambdaProperties, Concavity) {
  Rng rng(502);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 2;
    const auto w1 = random_w(d, rng);
    const auto w2 = random_w(d, rng);
    const auto level = FractionalLevel::make(1.0 + (d - 1) * (trial + 0.5) / 10.0, d);
    const double l1 = lambda_numeric(w1, level).value;
    const double l2 = lambda_numeric(w2, level).value;
    for (double tau : {0.25, 0.5, 0.75}) {
      const HermitianOperator mix(w1.dims, tau * w1.mat + (1.0 - tau) * w2.mat);
      EXPECT_GE(lambda_numeric(mix, level).value, tau * l1 + (1.0 - tau) * l2 - 2e-6);
    }
  }
}

TEST(LambdaProperties, Lipschitz) {
  Rng rng(503);
  std::uniform_real_distribution<double> scale(1e-3, 0.5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 2;
    const auto w = random_w(d, rng);
    const HermitianOperator w2(w.dims, w.mat + scale(rng) * random_hermitian(d * d, rng));
    const auto level = FractionalLevel::make(1.0 + (d - 1) * (trial + 0.5) / 10.0, d);
    const double gap = std::abs(lambda_numeric(w, level).value - lambda_numeric(w2, level).value);
    EXPECT_LE(gap, op_norm(w.mat - w2.mat) + 2e-6);
  }
}

}  // namespace
}  // namespace fracpos
