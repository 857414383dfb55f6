#include "fracpos/counterexamples.hpp"

#include <cmath>

#include "fracpos/cones.hpp"
#include "fracpos/errors.hpp"
#include "fracpos/format.hpp"
#include "fracpos/thresholds.hpp"

namespace fracpos {

StrictInclusionReport demo_strict_inclusion(int k, double theta, BipartiteDims dims) {
  if (dims.n != dims.m) throw ShapeError("strict inclusion demo needs a square bipartite shape");
  auto pair = strict_inclusion_pair(k, theta, dims);
  const int d = dims.d();
  const auto lower = FractionalLevel::integer(k, d);
  const auto upper = FractionalLevel::integer(k + 1, d);
  const auto alpha_prime = pair.level;

  StrictInclusionReport rep{pair,
                            is_admissible_vector(pair.psi_theta, alpha_prime),
                            is_admissible_vector(pair.psi_theta, lower),
                            is_admissible_vector(pair.psi_theta_prime, upper),
                            is_admissible_vector(pair.psi_theta_prime, alpha_prime),
                            quadratic_form(witness_operator(d, lower).mat, pair.psi_theta),
                            false};
  rep.confirmed = rep.theta_at_alpha.admissible && !rep.theta_at_k.admissible &&
                  rep.prime_at_next.admissible && !rep.prime_at_alpha.admissible &&
                  rep.witness_value < 0.0;
  return rep;
}

CpFailureCertificate demo_cp_failure(int d, const FractionalLevel& level, double t) {
  if (d < 2) throw DomainError("need d >= 2");
  if (level.d() != d) throw ShapeError("level dimension does not match d");
  if (level.is_integer()) {
    throw DomainError("CP post-composition failure needs a non-integer alpha");
  }
  const int k = level.k();
  if (k + 1 > d) throw DomainError("need k+1 <= d");
  const double lo = t_star(FractionalLevel::integer(k + 1, d));
  const double hi = t_star(level);
  if (!(t > lo && t <= hi)) {
    throw DomainError("t = " + format_double(t) + " outside the window (" + format_double(lo) +
                      ", " + format_double(hi) + "] where the map is alpha-positive but not (k+1)-positive");
  }

  const BipartiteDims dims = BipartiteDims::square(d);
  const ChoiMatrix w = choi_depolarizing(d, t);

  // Flat rank-(k+1) witness: <phi, W phi> = 1 - t(k+1) < 0 on the window.
  const BipartiteVector phi = extremal_vector(FractionalLevel::integer(k + 1, d), dims);
  const double phi_value = quadratic_form(w.mat, phi);

  // Smallest attenuation with s_{k+1}/t_A <= (theta/k) * k s = theta s.
  const double attenuation = 1.0 / level.theta();
  ComplexMatrix a = ComplexMatrix::Identity(d, d);
  a(k, k) = attenuation;

  ComplexVector tilde = phi.coeffs();
  tilde(k * d + k) /= attenuation;
  const BipartiteVector psi_tilde(dims, tilde);
  const double norm2 = tilde.squaredNorm();
  const BipartiteVector psi_t = psi_tilde.normalized();

  const ChoiMatrix composed = choi_postcompose(w, a);
  CpFailureCertificate cert{d,
                            level,
                            t,
                            attenuation,
                            phi,
                            phi_value,
                            psi_tilde,
                            norm2,
                            psi_t,
                            is_admissible_vector(psi_t, level),
                            a,
                            quadratic_form(composed.mat, psi_t),
                            phi_value / norm2};

  if (!(phi_value < 0.0)) throw VerificationError("witness vector is not negative");
  if (!cert.psi_t_report.admissible) throw VerificationError("psi_t is not alpha-admissible");
  if (!(cert.quadratic_value < 0.0)) throw VerificationError("post-composed form is not negative");
  if (std::abs(cert.quadratic_value - cert.predicted_value) > 1e-10) {
    throw VerificationError("quadratic value disagrees with the predicted identity");
  }
  return cert;
}

}  // namespace fracpos
