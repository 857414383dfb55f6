#pragma once

#include <functional>
#include <vector>

#include "fracpos/admissibility.hpp"
#include "fracpos/linalg.hpp"

namespace fracpos {

/// Hermitian operator on C^n ⊗ C^m. For a Choi matrix n is the input
/// dimension and m the output dimension.
struct BipartiteOperator {
  BipartiteDims dims;
  ComplexMatrix mat;

  BipartiteOperator() = default;
  BipartiteOperator(BipartiteDims dims_, ComplexMatrix mat_);
};

using ChoiMatrix = BipartiteOperator;
using HermitianOperator = BipartiteOperator;

/// Nonempty list of m×n Kraus operators of a common shape.
class KrausList {
 public:
  explicit KrausList(std::vector<ComplexMatrix> ops);

  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  int input_dim() const { return static_cast<int>(ops_.front().cols()); }
  int output_dim() const { return static_cast<int>(ops_.front().rows()); }
  BipartiteDims dims() const { return {input_dim(), output_dim()}; }

  /// X -> sum_i A_i X A_i^*
  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  std::vector<ComplexMatrix> ops_;
};

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Deviation above which assembled Choi matrices trigger a warning.
inline constexpr double kHermitianWarn = 1e-10;

/// sum_i vec(A_i) vec(A_i)^*
ChoiMatrix choi_from_kraus(const KrausList& ks);

/// sum_ij E_ij ⊗ apply(E_ij), symmetrized to be exactly Hermitian.
ChoiMatrix choi_from_action(const LinearMap& apply, int n, int m);

/// Choi matrix of X -> Tr(X) I - t X on M_d: I - t d P_omega.
ChoiMatrix choi_depolarizing(int d, double t);

/// Choi matrix of Ad_A ∘ Phi: (I ⊗ A) W (I ⊗ A^*).
ChoiMatrix choi_postcompose(const ChoiMatrix& w, const ComplexMatrix& a);

/// Canonical (eigenvector) Kraus operators. Throws DomainError when C has an
/// eigenvalue below -tol; eigenvalues at or below tol * lambda_max are dropped.
KrausList choi_to_kraus(const ChoiMatrix& c, double tol = 1e-12);

struct KrausCertificate {
  bool passed = false;
  FractionalLevel level;
  std::vector<AdmissibilityReport> reports;
  /// Indices of operators that failed admissibility.
  std::vector<std::size_t> failing;
};

/// Passes iff every Kraus operator is alpha-admissible, which certifies that
/// the Choi matrix lies in the fractional superpositive cone at that level.
KrausCertificate verify_fractional_kraus(const KrausList& ks, const FractionalLevel& level,
                                         double tol = kFeasibilityTol);

}  // namespace fracpos
