#include "fracpos/choi.hpp"

#include <iostream>
#include <string>

#include "fracpos/errors.hpp"

namespace fracpos {

BipartiteOperator::BipartiteOperator(BipartiteDims dims_, ComplexMatrix mat_)
    : dims(dims_), mat(std::move(mat_)) {
  if (mat.rows() != dims.total() || mat.cols() != dims.total()) {
    throw ShapeError("operator of shape " + std::to_string(mat.rows()) + "x" +
                     std::to_string(mat.cols()) + " is not (nm)x(nm) for dims " +
                     std::to_string(dims.n) + "x" + std::to_string(dims.m));
  }
}

KrausList::KrausList(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw ShapeError("Kraus list is empty");
  const auto rows = ops_.front().rows();
  const auto cols = ops_.front().cols();
  if (rows < 1 || cols < 1) throw ShapeError("Kraus operator has an empty shape");
  for (const auto& a : ops_) {
    if (a.rows() != rows || a.cols() != cols) {
      throw ShapeError("Kraus operators have inconsistent shapes");
    }
  }
}

ComplexMatrix KrausList::apply(const ComplexMatrix& x) const {
  if (x.rows() != input_dim() || x.cols() != input_dim()) {
    throw ShapeError("input matrix does not match Kraus input dimension");
  }
  ComplexMatrix out = ComplexMatrix::Zero(output_dim(), output_dim());
  for (const auto& a : ops_) out += a * x * a.adjoint();
  return out;
}

ChoiMatrix choi_from_kraus(const KrausList& ks) {
  const BipartiteDims dims = ks.dims();
  ComplexMatrix c = ComplexMatrix::Zero(dims.total(), dims.total());
  for (const auto& a : ks.ops()) {
    const ComplexVector v = vec_operator(a).coeffs();
    c.noalias() += v * v.adjoint();
  }
  return {dims, c};
}

ChoiMatrix choi_from_action(const LinearMap& apply, int n, int m) {
  const BipartiteDims dims(n, m);
  ComplexMatrix c = ComplexMatrix::Zero(dims.total(), dims.total());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, j) = 1.0;
      const ComplexMatrix out = apply(e);
      if (out.rows() != m || out.cols() != m) {
        throw ShapeError("map returned a " + std::to_string(out.rows()) + "x" +
                         std::to_string(out.cols()) + " matrix, expected " + std::to_string(m) +
                         "x" + std::to_string(m));
      }
      c.block(i * m, j * m, m, m) = out;
    }
  }
  const double dev = hermitian_deviation(c);
  if (dev > kHermitianWarn) {
    std::clog << "warning: Choi matrix deviates from Hermitian by " << dev
              << "; symmetrizing\n";
  }
  return {dims, hermitian_part(c)};
}

ChoiMatrix choi_depolarizing(int d, double t) {
  if (d < 2) throw DomainError("depolarizing family needs d >= 2");
  const BipartiteDims dims = BipartiteDims::square(d);
  const ComplexVector big_omega = BipartiteVector::omega_unnormalized(dims).coeffs();
  ComplexMatrix c = ComplexMatrix::Identity(dims.total(), dims.total());
  c.noalias() -= t * (big_omega * big_omega.adjoint());
  return {dims, c};
}

ChoiMatrix choi_postcompose(const ChoiMatrix& w, const ComplexMatrix& a) {
  if (a.cols() != w.dims.m) {
    throw ShapeError("post-composed operator has " + std::to_string(a.cols()) +
                     " columns, expected output dimension " + std::to_string(w.dims.m));
  }
  const ComplexMatrix lift = kron(ComplexMatrix::Identity(w.dims.n, w.dims.n), a);
  return {BipartiteDims(w.dims.n, static_cast<int>(a.rows())), lift * w.mat * lift.adjoint()};
}

KrausList choi_to_kraus(const ChoiMatrix& c, double tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(c.mat));
  const RealVector& lambda = eig.eigenvalues();
  if (lambda(0) < -tol) {
    throw DomainError("Choi matrix has eigenvalue " + std::to_string(lambda(0)) +
                      " below -tol; the map is not completely positive");
  }
  const double top = lambda(lambda.size() - 1);
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index i = lambda.size() - 1; i >= 0; --i) {
    if (lambda(i) <= tol * top || lambda(i) <= 0.0) break;
    const BipartiteVector v(c.dims, std::sqrt(lambda(i)) * eig.eigenvectors().col(i));
    ops.push_back(unvec_operator(v));
  }
  if (ops.empty()) ops.push_back(ComplexMatrix::Zero(c.dims.m, c.dims.n));
  return KrausList(std::move(ops));
}

KrausCertificate verify_fractional_kraus(const KrausList& ks, const FractionalLevel& level,
                                         double tol) {
  KrausCertificate cert{true, level, {}, {}};
  cert.reports.reserve(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    cert.reports.push_back(is_admissible_matrix(ks.ops()[i], level, tol));
    if (!cert.reports.back().admissible) {
      cert.passed = false;
      cert.failing.push_back(i);
    }
  }
  return cert;
}

}  // namespace fracpos
