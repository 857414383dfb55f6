#pragma once

#include "fracpos/admissibility.hpp"
#include "fracpos/choi.hpp"

namespace fracpos {

struct StrictInclusionReport {
  StrictInclusionPair pair;
  AdmissibilityReport theta_at_alpha;   // expected admissible
  AdmissibilityReport theta_at_k;       // expected rank failure
  AdmissibilityReport prime_at_next;    // expected admissible at k+1
  AdmissibilityReport prime_at_alpha;   // expected ratio failure
  /// Tr(W_k |psi_theta><psi_theta|) for the level-k isotropic witness.
  double witness_value;
  bool confirmed;
};

/// Separating vectors for V_k ⊊ V_alpha ⊊ V_{k+1} on C^d ⊗ C^d, plus a
/// witness refuting |psi_theta><psi_theta| in the level-k cone.
StrictInclusionReport demo_strict_inclusion(int k, double theta, BipartiteDims dims);

/// Audit trail of an alpha-positive depolarizing map whose post-composition
/// with a one-Kraus CP map Ad_A is no longer alpha-positive.
struct CpFailureCertificate {
  int d;
  FractionalLevel level;
  double t;
  /// Factor applied to f_{k+1} by A.
  double attenuation;
  /// Rank-(k+1) vector with <phi, C phi> < 0 for the unmodified Choi matrix.
  BipartiteVector phi;
  double phi_value;
  /// Unnormalized preimage and its squared norm.
  BipartiteVector psi_tilde;
  double psi_tilde_norm2;
  BipartiteVector psi_t;
  AdmissibilityReport psi_t_report;
  ComplexMatrix attenuator;
  double quadratic_value;
  double predicted_value;
};

/// Requires 0 < theta, k+1 <= d and t in (t_star(k+1), t_star(alpha)].
CpFailureCertificate demo_cp_failure(int d, const FractionalLevel& level, double t);

}  // namespace fracpos
