#pragma once

#include <cstdint>
#include <vector>

#include "fracpos/admissibility.hpp"
#include "fracpos/choi.hpp"

namespace fracpos {

/// a I + b P_omega on C^d ⊗ C^d.
struct IsotropicCoefficients {
  double a = 0.0;
  double b = 0.0;
  int d = 2;

  bool is_psd(double tol = 1e-12) const;
  double trace() const { return a * d * d + b; }
  /// (a + b) / (a d^2 + b); throws DomainError when the trace vanishes.
  double fidelity() const;
  HermitianOperator to_operator() const;
};

/// Isotropic state (1-F)/(d^2-1) (I - P_omega) + F P_omega as coefficients.
IsotropicCoefficients isotropic_state(double fidelity, int d);

/// Closed form min over admissible x of <x, (I - t d P_omega) x>:
/// 1 - t (k+theta)^2 / (k+theta^2). Throws DomainError for t < 0.
double lambda_depolarizing_closed_form(int d, double t, const FractionalLevel& level);

/// max over admissible x of |<omega, x>|^2 = (k+theta)^2 / (d (k+theta^2)).
double mu_alpha_pomega(int d, const FractionalLevel& level);

/// Orthogonal projection onto span{I, P_omega} in the trace inner product;
/// coincides with the U ⊗ conj(U) Haar average.
IsotropicCoefficients twirl_isotropic(const HermitianOperator& x);

/// Whether a I + b P_omega has a nonnegative form on all admissible vectors:
/// a >= 0 and a + b f_d(alpha) >= 0.
bool isotropic_bp_membership(const IsotropicCoefficients& c, const FractionalLevel& level);

/// Whether a I + b P_omega lies in the conic hull of admissible projectors:
/// PSD and F <= f_d(alpha). Non-PSD input is rejected; zero is accepted.
bool isotropic_k_membership(const IsotropicCoefficients& c, const FractionalLevel& level);

/// I - P_omega / f_d(alpha).
HermitianOperator witness_operator(int d, const FractionalLevel& level);

struct OptimizerConfig {
  int starts = 64;
  int max_iters = 500;
  std::uint64_t seed = 0x5EED;
  double tol = 1e-12;
  /// Worker threads for the multistart loop; results do not depend on it.
  int threads = 1;
  /// Extra feasible starting points appended after the regular starts.
  std::vector<BipartiteVector> warm_starts;
};

/// Starts whose feasibility residual exceeds this are discarded.
inline constexpr double kMaxResidual = 1e-7;

struct LambdaEstimate {
  double value;
  BipartiteVector argmin;
  FractionalLevel level;
  double feasibility_residual;
  int starts_used;
  /// Index of the start that produced argmin.
  int best_start;
};

/// Multistart estimate of min { <x, W x> : x alpha-admissible }. The value
/// is attained by argmin, hence an upper bound on the true minimum.
LambdaEstimate lambda_numeric(const HermitianOperator& w, const FractionalLevel& level,
                              const OptimizerConfig& cfg = {});

/// max { <x, W x> : x alpha-admissible } = -lambda(-W).
LambdaEstimate mu_numeric(const HermitianOperator& w, const FractionalLevel& level,
                          const OptimizerConfig& cfg = {});

}  // namespace fracpos
