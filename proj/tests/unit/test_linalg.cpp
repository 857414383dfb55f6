#include <cmath>

#include <gtest/gtest.h>

#include "fracpos/errors.hpp"
#include "fracpos/linalg.hpp"
#include "fracpos/random.hpp"

namespace fracpos {
namespace {

const BipartiteDims k2x2(2, 2);

TEST(Matricize, BasisVector) {
  const ComplexMatrix x = matricize(BipartiteVector::basis(k2x2, 0, 0));
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_TRUE(x.isApprox(expected));
}

TEST(Matricize, MaximallyEntangledIsScaledIdentity) {
  const ComplexMatrix x = matricize(BipartiteVector::omega(k2x2));
  EXPECT_LT((x - ComplexMatrix::Identity(2, 2) / std::sqrt(2.0)).norm(), 1e-15);
}

TEST(Matricize, DiagonalFromIndexMapping) {
  const double a = 1.0 / std::sqrt(1.25), b = 0.5 / std::sqrt(1.25);
  ComplexVector c(4);
  c << a, 0, 0, b;
  const ComplexMatrix x = matricize(BipartiteVector(k2x2, c));
  EXPECT_NEAR(x(0, 0).real(), 0.894427190999916, 1e-12);
  EXPECT_NEAR(x(1, 1).real(), 0.447213595499958, 1e-12);
  EXPECT_EQ(x(0, 1), Complex(0.0));
  EXPECT_EQ(x(1, 0), Complex(0.0));
}

TEST(Matricize, RectangularIndexing) {
  const BipartiteDims dims(2, 3);
  const ComplexMatrix x = matricize(BipartiteVector::basis(dims, 1, 2));
  EXPECT_EQ(x.rows(), 2);
  EXPECT_EQ(x.cols(), 3);
  EXPECT_EQ(x(1, 2), Complex(1.0));
}

TEST(Vectorize, IdentityGivesBigOmega) {
  const BipartiteVector v = vectorize(ComplexMatrix::Identity(2, 2), k2x2);
  ComplexVector expected(4);
  expected << 1, 0, 0, 1;
  EXPECT_EQ(v.coeffs(), expected);
  EXPECT_EQ(v.coeffs(), BipartiteVector::omega_unnormalized(k2x2).coeffs());
}

TEST(Vectorize, ZeroMatrix) {
  EXPECT_EQ(vectorize(ComplexMatrix::Zero(2, 3), {2, 3}).norm(), 0.0);
}

TEST(Vectorize, ShapeMismatchThrows) {
  EXPECT_THROW(vectorize(ComplexMatrix::Zero(3, 2), {2, 3}), ShapeError);
  EXPECT_THROW(BipartiteVector(k2x2, ComplexVector::Zero(3)), ShapeError);
  EXPECT_THROW(BipartiteDims(0, 2), ShapeError);
}

TEST(Vectorize, RoundTripIsExact) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const BipartiteDims dims(1 + trial % 4, 1 + (trial / 4) % 4);
    const BipartiteVector psi = random_unit_vector(dims, rng);
    EXPECT_EQ(vectorize(matricize(psi), dims).coeffs(), psi.coeffs());
  }
}

TEST(VecOperator, ColumnStackingSatisfiesKroneckerIdentity) {
  // vec(A X B) = (B^T ⊗ A) vec(X) with vec the column stacking.
  Rng rng(3);
  const ComplexMatrix a = ginibre(3, 2, rng);
  const ComplexMatrix x = ginibre(2, 4, rng);
  const ComplexMatrix b = ginibre(4, 2, rng);
  const ComplexVector lhs = vec_operator(a * x * b).coeffs();
  const ComplexVector rhs = kron(b.transpose(), a) * vec_operator(x).coeffs();
  EXPECT_LT((lhs - rhs).norm(), 1e-12);
  EXPECT_TRUE(unvec_operator(vec_operator(a)).isApprox(a));
}

TEST(SchmidtSpectrum, Examples) {
  auto s = schmidt_spectrum(BipartiteVector::omega(k2x2));
  EXPECT_NEAR(s[0], std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(s[1], std::sqrt(0.5), 1e-12);

  s = schmidt_spectrum(BipartiteVector::basis(k2x2, 0, 0));
  EXPECT_NEAR(s[0], 1.0, 1e-15);
  EXPECT_NEAR(s[1], 0.0, 1e-15);
  EXPECT_EQ(s.rank(), 1);

  const double k = 1, theta = 0.5;
  ComplexVector c(4);
  c << 1.0 / std::sqrt(k + theta * theta), 0, 0, theta / std::sqrt(k + theta * theta);
  s = schmidt_spectrum(BipartiteVector(k2x2, c));
  EXPECT_NEAR(s[0], 0.89443, 1e-5);
  EXPECT_NEAR(s[1], 0.44721, 1e-5);
}

TEST(SchmidtSpectrum, PaddedToMinDimension) {
  Rng rng(5);
  const auto s = schmidt_spectrum(random_unit_vector({3, 5}, rng));
  EXPECT_EQ(s.size(), 3);
  const auto p = schmidt_spectrum(BipartiteVector::basis({4, 3}, 2, 1));
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p[2], 0.0);
}

TEST(SchmidtSpectrum, ZeroVectorThrows) {
  EXPECT_THROW(schmidt_spectrum(BipartiteVector::zero(k2x2)), DomainError);
}

TEST(SchmidtDecomposition, Reconstructs) {
  Rng rng(8);
  const BipartiteDims dims(3, 4);
  const BipartiteVector psi = random_unit_vector(dims, rng);
  const auto sd = schmidt_decompose(psi);
  ComplexVector rebuilt = ComplexVector::Zero(dims.total());
  for (int j = 0; j < dims.d(); ++j) {
    rebuilt += sd.spectrum[j] *
               BipartiteVector::product(sd.left.col(j), sd.right.col(j)).coeffs();
  }
  EXPECT_LT((rebuilt - psi.coeffs()).norm(), 1e-12);
}

TEST(KyFan, Examples) {
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 0) = 0.8944;
  x(1, 1) = 0.4472;
  EXPECT_NEAR(ky_fan_norm(x, 1), 0.8944, 1e-12);
  EXPECT_NEAR(ky_fan_norm(x, 2), 1.3416, 1e-12);
  // Exact extremal value (k+theta)/sqrt(k+theta^2) at k=1, theta=0.5.
  x(0, 0) = 1.0 / std::sqrt(1.25);
  x(1, 1) = 0.5 / std::sqrt(1.25);
  EXPECT_NEAR(ky_fan_norm(x, 2), 1.5 / std::sqrt(1.25), 1e-14);
  EXPECT_NEAR(ky_fan_norm(x, 2), 1.34164, 1e-5);
  EXPECT_NEAR(ky_fan_norm(ComplexMatrix::Identity(3, 3), 2), 2.0, 1e-14);
}

TEST(KyFan, IndexOutOfRangeThrows) {
  EXPECT_THROW(ky_fan_norm(ComplexMatrix::Identity(3, 3), 0), DomainError);
  EXPECT_THROW(ky_fan_norm(ComplexMatrix::Identity(3, 2), 3), DomainError);
}

// Property suites on seeded random instances.

TEST(LinalgProperties, Isometry) {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteDims dims(2 + trial % 3, 2 + (trial / 3) % 3);
    const auto psi = random_unit_vector(dims, rng);
    const auto phi = random_unit_vector(dims, rng);
    const double lhs = (psi.coeffs() - phi.coeffs()).norm();
    const double rhs = (matricize(psi) - matricize(phi)).norm();
    EXPECT_NEAR(lhs, rhs, 1e-12);
    EXPECT_NEAR(psi.norm(), matricize(psi).norm(), 1e-12);
  }
}

TEST(LinalgProperties, SchmidtMatchesSvd) {
  Rng rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteDims dims(2 + trial % 3, 2 + (trial / 3) % 3);
    const auto psi = random_unit_vector(dims, rng);
    const auto s = schmidt_spectrum(psi);
    // Independent route: eigenvalues of the reduced density matrix X X^*.
    const ComplexMatrix x = matricize(psi);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(x * x.adjoint());
    const RealVector ev = eig.eigenvalues().reverse();
    double sumsq = 0.0;
    for (int j = 0; j < s.size(); ++j) {
      EXPECT_NEAR(s[j] * s[j], std::max(0.0, ev(j)), 1e-12);
      if (j > 0) EXPECT_GE(s[j - 1], s[j]);
      sumsq += s[j] * s[j];
    }
    EXPECT_NEAR(sumsq, 1.0, 1e-12);
  }
}

TEST(LinalgProperties, KyFanMonotoneAndTraceNorm) {
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix x = ginibre(2 + trial % 4, 2 + (trial / 4) % 4, rng);
    const int d = static_cast<int>(std::min(x.rows(), x.cols()));
    for (int k = 2; k <= d; ++k) EXPECT_GE(ky_fan_norm(x, k), ky_fan_norm(x, k - 1));
    EXPECT_NEAR(ky_fan_norm(x, d), trace_norm(x), 1e-12);
  }
}

TEST(LinalgProperties, LocalUnitaryInvarianceOfSpectrum) {
  Rng rng(104);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteDims dims(2 + trial % 3, 2 + (trial / 3) % 3);
    const auto psi = random_unit_vector(dims, rng);
    const ComplexMatrix u = haar_unitary(dims.n, rng);
    const ComplexMatrix v = haar_unitary(dims.m, rng);
    const BipartiteVector rotated(dims, kron(u, v) * psi.coeffs());
    const auto s0 = schmidt_spectrum(psi);
    const auto s1 = schmidt_spectrum(rotated);
    for (int j = 0; j < s0.size(); ++j) EXPECT_NEAR(s0[j], s1[j], 1e-10);
  }
}

}  // namespace
}  // namespace fracpos
