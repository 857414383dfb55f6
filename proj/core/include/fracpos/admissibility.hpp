#pragma once

#include <utility>

#include "fracpos/linalg.hpp"

namespace fracpos {

/// Default feasibility slack for admissibility predicates.
inline constexpr double kFeasibilityTol = 1e-9;

/// A fractional level alpha in [1, d] split as alpha = k + theta with
/// k = floor(alpha), theta in [0, 1) and r = ceil(alpha).
class FractionalLevel {
 public:
  /// Throws DomainError unless 1 <= alpha <= d. Values within 1e-12 of an
  /// integer snap to it.
  static FractionalLevel make(double alpha, int d);
  static FractionalLevel integer(int k, int d) { return make(static_cast<double>(k), d); }

  double alpha() const { return alpha_; }
  int k() const { return k_; }
  double theta() const { return theta_; }
  int r() const { return r_; }
  int d() const { return d_; }
  bool is_integer() const { return theta_ == 0.0; }

  /// theta / k, the admissible ratio bound on s_{k+1} / sum_{j<=k} s_j.
  double ratio_bound() const { return theta_ / k_; }

 private:
  FractionalLevel(double alpha, int k, double theta, int r, int d)
      : alpha_(alpha), k_(k), theta_(theta), r_(r), d_(d) {}

  double alpha_;
  int k_;
  double theta_;
  int r_;
  int d_;
};

struct AdmissibilityReport {
  bool admissible = false;
  bool rank_ok = false;
  bool ratio_ok = false;
  /// k * s_{k+1} / sum_{j<=k} s_j; compared against theta.
  double observed_ratio = 0.0;
  SchmidtSpectrum spectrum;
  /// Norm of the input before internal renormalization (1 for matrices
  /// normalized by Frobenius norm, 0 for the zero matrix).
  double input_norm = 1.0;
};

/// Predicate on a nonincreasing spectrum with sum of squares 1 (or zero).
AdmissibilityReport check_spectrum(const SchmidtSpectrum& s, const FractionalLevel& level,
                                   double tol = kFeasibilityTol);

/// Throws DomainError for the zero vector or when | ||psi|| - 1 | > tol.
AdmissibilityReport is_admissible_vector(const BipartiteVector& psi, const FractionalLevel& level,
                                         double tol = kFeasibilityTol);

/// Scale-invariant; the zero matrix is admissible.
AdmissibilityReport is_admissible_matrix(const ComplexMatrix& a, const FractionalLevel& level,
                                         double tol = kFeasibilityTol);

/// ||A||_1 / ||A||_(k).
double nuclear_ky_fan_ratio(const ComplexMatrix& a, int k);

/// Whether ||A||_1 / ||A||_(k) <= 1 + theta/k. Requires A != 0 and
/// rank(A) <= k+1; on that domain it agrees with is_admissible_matrix.
bool ky_fan_ratio_check(const ComplexMatrix& a, const FractionalLevel& level,
                        double tol = kFeasibilityTol);

/// Schmidt weights of the extremal vector: k copies of 1/sqrt(k+theta^2)
/// followed by theta/sqrt(k+theta^2) when theta > 0.
std::vector<double> extremal_weights(const FractionalLevel& level);

/// sum_{j<=k} a e_j⊗f_j + theta a e_{k+1}⊗f_{k+1}, a = 1/sqrt(k+theta^2).
/// Maximizes the sum of Schmidt coefficients over the admissible set.
BipartiteVector extremal_vector(const FractionalLevel& level, BipartiteDims dims);

struct StrictInclusionPair {
  FractionalLevel level;     // alpha = k + theta
  double theta_prime;        // (1 + theta) / 2
  BipartiteVector psi_theta;        // admissible at alpha, not at k
  BipartiteVector psi_theta_prime;  // admissible at k+1, not at alpha
};

/// Builds and verifies the pair separating V_k ⊊ V_alpha ⊊ V_{k+1}.
StrictInclusionPair strict_inclusion_pair(int k, double theta, BipartiteDims dims);

}  // namespace fracpos
