#include "fracpos/random.hpp"

#include <cmath>

namespace fracpos {

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0 / std::sqrt(2.0));
  ComplexMatrix x(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) x(i, j) = Complex(g(rng), g(rng));
  }
  return x;
}

ComplexMatrix orthonormalize(const ComplexMatrix& x) {
  Eigen::HouseholderQR<ComplexMatrix> qr(x);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(x.rows(), x.cols());
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) q.col(j) *= rjj / a;
  }
  return q;
}

ComplexMatrix haar_unitary(int n, Rng& rng) { return orthonormalize(ginibre(n, n, rng)); }

ComplexMatrix random_stiefel(int n, int r, Rng& rng) { return orthonormalize(ginibre(n, r, rng)); }

ComplexMatrix random_hermitian(int dim, Rng& rng) { return hermitian_part(ginibre(dim, dim, rng)); }

BipartiteVector random_unit_vector(BipartiteDims dims, Rng& rng) {
  const ComplexMatrix g = ginibre(dims.total(), 1, rng);
  return BipartiteVector(dims, g.col(0)).normalized();
}

}  // namespace fracpos
