#include <cmath>

#include <gtest/gtest.h>

#include "fracpos/cones.hpp"
#include "fracpos/errors.hpp"
#include "fracpos/random.hpp"
#include "fracpos/thresholds.hpp"

namespace fracpos {
namespace {

TEST(ClosedForm, Examples) {
  EXPECT_NEAR(lambda_depolarizing_closed_form(2, 0.7, FractionalLevel::make(1.5, 2)), -0.26, 1e-15);
  for (int d = 2; d <= 5; ++d) {
    for (double alpha : {1.0, 1.3, 1.5, 2.0, 2.25}) {
      if (alpha > d) continue;
      const auto level = FractionalLevel::make(alpha, d);
      EXPECT_NEAR(lambda_depolarizing_closed_form(d, t_star(level), level), 0.0, 1e-15);
    }
    EXPECT_NEAR(lambda_depolarizing_closed_form(d, 0.8, FractionalLevel::integer(d, d)),
                1.0 - 0.8 * d, 1e-14);
  }
}

TEST(ClosedForm, Errors) {
  EXPECT_THROW(lambda_depolarizing_closed_form(2, -0.1, FractionalLevel::make(1.5, 2)), DomainError);
  EXPECT_THROW(lambda_depolarizing_closed_form(3, 0.5, FractionalLevel::make(1.5, 2)), ShapeError);
}

TEST(MuPOmega, Examples) {
  for (int d = 2; d <= 5; ++d) {
    EXPECT_NEAR(mu_alpha_pomega(d, FractionalLevel::integer(d, d)), 1.0, 1e-15);
    for (int k = 1; k <= d; ++k) {
      EXPECT_NEAR(mu_alpha_pomega(d, FractionalLevel::integer(k, d)), double(k) / d, 1e-15);
    }
  }
  EXPECT_NEAR(mu_alpha_pomega(3, FractionalLevel::make(1.5, 3)), 0.6, 1e-15);
}

TEST(Twirl, Examples) {
  const int d = 2;
  const ComplexVector omega = BipartiteVector::omega({d, d}).coeffs();
  auto c = twirl_isotropic(HermitianOperator({d, d}, omega * omega.adjoint()));
  EXPECT_NEAR(c.a, 0.0, 1e-15);
  EXPECT_NEAR(c.b, 1.0, 1e-15);

  c = twirl_isotropic(HermitianOperator({d, d}, ComplexMatrix::Identity(4, 4)));
  EXPECT_NEAR(c.a, 1.0, 1e-15);
  EXPECT_NEAR(c.b, 0.0, 1e-15);

  // E_11 ⊗ E_11: trace 1 and <omega|00>^2 = 1/2, so a = 1/6, b = 1/3.
  ComplexMatrix e = ComplexMatrix::Zero(4, 4);
  e(0, 0) = 1.0;
  c = twirl_isotropic(HermitianOperator({d, d}, e));
  EXPECT_NEAR(quadratic_form(e, BipartiteVector::omega({d, d})), 0.5, 1e-15);
  EXPECT_NEAR(c.a, 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(c.b, 1.0 / 3.0, 1e-15);
}

TEST(Twirl, MatchesHaarAverage) {
  // Monte Carlo average of (U ⊗ conj U) X (U ⊗ conj U)^* approaches the twirl.
  Rng rng(5);
  const int d = 2;
  const ComplexMatrix g = ginibre(4, 4, rng);
  const HermitianOperator x({d, d}, g + g.adjoint());
  ComplexMatrix avg = ComplexMatrix::Zero(4, 4);
  const int samples = 20000;
  for (int i = 0; i < samples; ++i) {
    const ComplexMatrix u = haar_unitary(d, rng);
    const ComplexMatrix uu = kron(u, u.conjugate());
    avg += uu * x.mat * uu.adjoint();
  }
  avg /= samples;
  EXPECT_LT((avg - twirl_isotropic(x).to_operator().mat).norm(), 0.1);
}

TEST(Twirl, NonSquareThrows) {
  EXPECT_THROW(twirl_isotropic(HermitianOperator({2, 3}, ComplexMatrix::Identity(6, 6))), ShapeError);
}

TEST(BpMembership, Examples) {
  const int d = 3;
  const auto level = FractionalLevel::make(1.5, d);
  const auto w = twirl_isotropic(witness_operator(d, level));
  EXPECT_NEAR(w.a, 1.0, 1e-14);
  EXPECT_NEAR(w.b, -1.0 / f_d(d, level), 1e-14);
  EXPECT_TRUE(isotropic_bp_membership(w, level));
  EXPECT_FALSE(isotropic_bp_membership(w, FractionalLevel::make(1.6, d)));
  EXPECT_FALSE(isotropic_bp_membership(w, FractionalLevel::make(3.0, d)));

  for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
    const auto l = FractionalLevel::make(alpha, d);
    EXPECT_TRUE(isotropic_bp_membership({1.0, 0.0, d}, l));
    EXPECT_FALSE(isotropic_bp_membership({0.0, -1.0, d}, l));
  }
}

TEST(KMembership, Examples) {
  for (int d = 2; d <= 4; ++d) {
    for (int k = 1; k <= d; ++k) {
      const auto level = FractionalLevel::integer(k, d);
      EXPECT_TRUE(isotropic_k_membership(isotropic_state(double(k) / d, d), level));
      EXPECT_TRUE(isotropic_k_membership({1.0 / (d * d), 0.0, d}, level));
      if (k < d) {
        EXPECT_FALSE(isotropic_k_membership(isotropic_state(1.0, d), level));
        EXPECT_FALSE(isotropic_k_membership(isotropic_state(double(k) / d + 1e-6, d), level));
      }
    }
  }
  EXPECT_FALSE(isotropic_k_membership({-0.1, 0.0, 2}, FractionalLevel::integer(2, 2)));
  EXPECT_TRUE(isotropic_k_membership({0.0, 0.0, 2}, FractionalLevel::integer(1, 2)));
}

TEST(IsotropicState, Fidelity) {
  for (double f : {0.0, 0.25, 0.6, 1.0}) {
    const auto c = isotropic_state(f, 3);
    EXPECT_NEAR(c.trace(), 1.0, 1e-15);
    EXPECT_NEAR(c.fidelity(), f, 1e-15);
    EXPECT_TRUE(c.is_psd());
  }
  EXPECT_THROW((IsotropicCoefficients{0.0, 0.0, 2}.fidelity()), DomainError);
}

TEST(Witness, Examples) {
  for (int d = 2; d <= 4; ++d) {
    for (double alpha : {1.0, 1.5, 2.0, 2.7}) {
      if (alpha > d) continue;
      const auto level = FractionalLevel::make(alpha, d);
      const auto w = witness_operator(d, level);
      const auto rho = isotropic_state(f_d(d, level), d).to_operator();
      EXPECT_NEAR((w.mat * rho.mat).trace().real(), 0.0, 1e-14);
      EXPECT_NEAR(quadratic_form(w.mat, extremal_vector(level, BipartiteDims::square(d))),
                  0.0, 1e-14);
    }
    // f_d(d) = 1 leaves I - P_omega, the projector onto the complement of omega.
    const auto top = witness_operator(d, FractionalLevel::integer(d, d));
    const ComplexVector omega = BipartiteVector::omega(BipartiteDims::square(d)).coeffs();
    EXPECT_LT((top.mat - (ComplexMatrix::Identity(d * d, d * d) - omega * omega.adjoint())).norm(),
              1e-14);
    EXPECT_LT((top.mat * top.mat - top.mat).norm(), 1e-14);
  }
}

// Property suites on seeded random instances.

TEST(ConesProperties, TwirlIdempotence) {
  Rng rng(401);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const IsotropicCoefficients c{u(rng), u(rng), 2 + trial % 4};
    const auto back = twirl_isotropic(c.to_operator());
    EXPECT_NEAR(back.a, c.a, 1e-13);
    EXPECT_NEAR(back.b, c.b, 1e-13);
    const auto again = twirl_isotropic(back.to_operator());
    EXPECT_NEAR(again.a, back.a, 1e-13);
    EXPECT_NEAR(again.b, back.b, 1e-13);
  }
}

TEST(ConesProperties, TwirlPreservesTraceAndFidelityPairing) {
  Rng rng(402);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 3;
    const ComplexMatrix g = ginibre(d * d, d * d, rng);
    const HermitianOperator x({d, d}, g + g.adjoint());
    const auto c = twirl_isotropic(x);
    const auto omega = BipartiteVector::omega({d, d});
    EXPECT_NEAR(c.trace(), x.mat.trace().real(), 1e-10);
    EXPECT_NEAR(c.a + c.b, quadratic_form(x.mat, omega), 1e-10);
  }
}

TEST(ConesProperties, SliceDualityConsistent) {
  // BP membership of the witness at level beta holds exactly when beta <= alpha.
  for (int d = 2; d <= 5; ++d) {
    for (int i = 0; i <= 10; ++i) {
      const auto alpha = FractionalLevel::make(1.0 + (d - 1) * i / 10.0, d);
      const auto w = twirl_isotropic(witness_operator(d, alpha));
      for (int j = 0; j <= 10; ++j) {
        const auto beta = FractionalLevel::make(1.0 + (d - 1) * j / 10.0, d);
        EXPECT_EQ(isotropic_bp_membership(w, beta), j <= i) << d << " " << i << " " << j;
      }
    }
  }
}

}  // namespace
}  // namespace fracpos
