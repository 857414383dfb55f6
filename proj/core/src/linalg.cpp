#include "fracpos/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracpos/errors.hpp"

namespace fracpos {

BipartiteDims::BipartiteDims(int n_, int m_) : n(n_), m(m_) {
  if (n < 1 || m < 1) {
    throw ShapeError("bipartite dimensions must be positive, got " + std::to_string(n) + "x" +
                     std::to_string(m));
  }
}

BipartiteVector::BipartiteVector(BipartiteDims dims, ComplexVector coeffs)
    : dims_(dims), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dims_.total()) {
    throw ShapeError("vector of length " + std::to_string(coeffs_.size()) +
                     " does not match dims " + std::to_string(dims_.n) + "x" +
                     std::to_string(dims_.m));
  }
}

BipartiteVector BipartiteVector::zero(BipartiteDims dims) {
  return {dims, ComplexVector::Zero(dims.total())};
}

BipartiteVector BipartiteVector::basis(BipartiteDims dims, int i, int j) {
  if (i < 0 || i >= dims.n || j < 0 || j >= dims.m) {
    throw ShapeError("basis index out of range");
  }
  ComplexVector c = ComplexVector::Zero(dims.total());
  c(i * dims.m + j) = 1.0;
  return {dims, std::move(c)};
}

BipartiteVector BipartiteVector::omega_unnormalized(BipartiteDims dims) {
  ComplexVector c = ComplexVector::Zero(dims.total());
  for (int i = 0; i < dims.d(); ++i) c(i * dims.m + i) = 1.0;
  return {dims, std::move(c)};
}

BipartiteVector BipartiteVector::omega(BipartiteDims dims) {
  return omega_unnormalized(dims).normalized();
}

BipartiteVector BipartiteVector::product(const ComplexVector& u, const ComplexVector& v) {
  BipartiteDims dims(static_cast<int>(u.size()), static_cast<int>(v.size()));
  ComplexVector c(dims.total());
  for (int i = 0; i < dims.n; ++i) {
    for (int j = 0; j < dims.m; ++j) c(i * dims.m + j) = u(i) * v(j);
  }
  return {dims, std::move(c)};
}

BipartiteVector BipartiteVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw DomainError("cannot normalize the zero vector");
  return {dims_, coeffs_ / nrm};
}

double SchmidtSpectrum::head_sum(int k) const {
  double s = 0.0;
  for (int j = 0; j < k && j < size(); ++j) s += values[j];
  return s;
}

int SchmidtSpectrum::rank() const {
  if (values.empty() || values[0] <= 0.0) return 0;
  const double cut = kRankCutoff * values[0];
  return static_cast<int>(std::count_if(values.begin(), values.end(),
                                        [cut](double v) { return v > cut; }));
}

ComplexMatrix matricize(const BipartiteVector& psi) {
  const auto& d = psi.dims();
  ComplexMatrix x(d.n, d.m);
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.m; ++j) x(i, j) = psi.coeffs()(i * d.m + j);
  }
  return x;
}

BipartiteVector vectorize(const ComplexMatrix& x, BipartiteDims dims) {
  if (x.rows() != dims.n || x.cols() != dims.m) {
    throw ShapeError("matrix of shape " + std::to_string(x.rows()) + "x" +
                     std::to_string(x.cols()) + " does not match dims " +
                     std::to_string(dims.n) + "x" + std::to_string(dims.m));
  }
  ComplexVector c(dims.total());
  for (int i = 0; i < dims.n; ++i) {
    for (int j = 0; j < dims.m; ++j) c(i * dims.m + j) = x(i, j);
  }
  return {dims, std::move(c)};
}

BipartiteVector vec_operator(const ComplexMatrix& a) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  return vectorize(a.transpose(), BipartiteDims(n, m));
}

ComplexMatrix unvec_operator(const BipartiteVector& psi) { return matricize(psi).transpose(); }

RealVector singular_values(const ComplexMatrix& x) {
  if (x.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  return svd.singularValues();
}

SchmidtSpectrum schmidt_spectrum(const BipartiteVector& psi) {
  if (psi.norm() == 0.0) throw DomainError("the zero vector has no Schmidt decomposition");
  const RealVector sv = singular_values(matricize(psi));
  SchmidtSpectrum out;
  out.values.assign(sv.data(), sv.data() + sv.size());
  out.values.resize(psi.dims().d(), 0.0);
  return out;
}

SchmidtDecomposition schmidt_decompose(const BipartiteVector& psi) {
  if (psi.norm() == 0.0) throw DomainError("the zero vector has no Schmidt decomposition");
  const auto& dims = psi.dims();
  Eigen::JacobiSVD<ComplexMatrix> svd(matricize(psi), Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  const RealVector& sv = svd.singularValues();
  out.spectrum.values.assign(sv.data(), sv.data() + sv.size());
  out.left = svd.matrixU().leftCols(dims.d());
  out.right = svd.matrixV().leftCols(dims.d()).conjugate();
  return out;
}

double ky_fan_norm(const ComplexMatrix& x, int k) {
  const int d = static_cast<int>(std::min(x.rows(), x.cols()));
  if (k < 1 || k > d) {
    throw DomainError("Ky-Fan index " + std::to_string(k) + " outside [1," + std::to_string(d) +
                      "]");
  }
  return singular_values(x).head(k).sum();
}

double trace_norm(const ComplexMatrix& x) { return singular_values(x).sum(); }

int numerical_rank(const ComplexMatrix& x) {
  const RealVector sv = singular_values(x);
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cut = kRankCutoff * sv(0);
  return static_cast<int>((sv.array() > cut).count());
}

double quadratic_form(const ComplexMatrix& w, const BipartiteVector& psi) {
  if (w.rows() != psi.coeffs().size() || w.cols() != psi.coeffs().size()) {
    throw ShapeError("operator and vector dimensions differ");
  }
  return psi.coeffs().dot(w * psi.coeffs()).real();
}

ComplexMatrix hermitian_part(const ComplexMatrix& w) { return 0.5 * (w + w.adjoint()); }

double hermitian_deviation(const ComplexMatrix& w) {
  return (w - w.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix outer(const BipartiteVector& psi) {
  return psi.coeffs() * psi.coeffs().adjoint();
}

}  // namespace fracpos
