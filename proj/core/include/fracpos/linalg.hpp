#pragma once

// Dense complex linear algebra on bipartite spaces C^n ⊗ C^m.
//
// Conventions
// -----------
// A vector psi in C^n ⊗ C^m stores the coefficient of e_i ⊗ f_j at flat
// index i*m + j (Kronecker order). Its matricization is the n×m matrix whose
// (i,j) entry is that coefficient. For a Kraus-type operator A : C^n -> C^m
// (an m×n matrix) the column-stacked vector vec(A) has A(j,i) at index
// i*m + j, so matricize(vec(A)) == A^T and vec(A X B) = (B^T ⊗ A) vec(X).

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace fracpos {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Relative cutoff below which a singular value counts as zero for rank.
inline constexpr double kRankCutoff = 1e-12;

struct BipartiteDims {
  int n = 1;
  int m = 1;

  BipartiteDims() = default;
  BipartiteDims(int n_, int m_);

  static BipartiteDims square(int d) { return {d, d}; }

  int d() const { return n < m ? n : m; }
  int total() const { return n * m; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Complex vector in C^n ⊗ C^m together with its factor dimensions.
class BipartiteVector {
 public:
  BipartiteVector() = default;
  BipartiteVector(BipartiteDims dims, ComplexVector coeffs);

  static BipartiteVector zero(BipartiteDims dims);
  /// e_i ⊗ f_j
  static BipartiteVector basis(BipartiteDims dims, int i, int j);
  /// Omega = sum_i e_i ⊗ f_i over i < d (unnormalized).
  static BipartiteVector omega_unnormalized(BipartiteDims dims);
  /// omega = Omega / sqrt(d).
  static BipartiteVector omega(BipartiteDims dims);
  /// u ⊗ v
  static BipartiteVector product(const ComplexVector& u, const ComplexVector& v);

  const BipartiteDims& dims() const { return dims_; }
  const ComplexVector& coeffs() const { return coeffs_; }
  Complex operator()(int i, int j) const { return coeffs_(i * dims_.m + j); }

  double norm() const { return coeffs_.norm(); }
  BipartiteVector normalized() const;

 private:
  BipartiteDims dims_{};
  ComplexVector coeffs_ = ComplexVector::Zero(1);
};

/// Nonincreasing nonnegative Schmidt coefficients, padded with zeros to d.
struct SchmidtSpectrum {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double operator[](std::size_t j) const { return values[j]; }
  /// Sum of the first k values.
  double head_sum(int k) const;
  /// Number of values above kRankCutoff * values[0].
  int rank() const;
};

/// Full Schmidt decomposition psi = sum_j s_j u_j ⊗ v_j.
struct SchmidtDecomposition {
  SchmidtSpectrum spectrum;
  ComplexMatrix left;   // n × d, orthonormal columns u_j
  ComplexMatrix right;  // m × d, orthonormal columns v_j (already conjugated)
};

ComplexMatrix matricize(const BipartiteVector& psi);
BipartiteVector vectorize(const ComplexMatrix& x, BipartiteDims dims);

/// Column-stacking vec of an m×n operator, as a vector in C^n ⊗ C^m.
BipartiteVector vec_operator(const ComplexMatrix& a);
/// Inverse of vec_operator: the m×n operator whose vec is psi.
ComplexMatrix unvec_operator(const BipartiteVector& psi);

/// Singular values, nonincreasing.
RealVector singular_values(const ComplexMatrix& x);

SchmidtSpectrum schmidt_spectrum(const BipartiteVector& psi);
SchmidtDecomposition schmidt_decompose(const BipartiteVector& psi);

double ky_fan_norm(const ComplexMatrix& x, int k);
double trace_norm(const ComplexMatrix& x);
int numerical_rank(const ComplexMatrix& x);

/// Re <psi, W psi>
double quadratic_form(const ComplexMatrix& w, const BipartiteVector& psi);

/// (W + W^*) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& w);
double hermitian_deviation(const ComplexMatrix& w);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Projector |psi><psi|.
ComplexMatrix outer(const BipartiteVector& psi);

}  // namespace fracpos
