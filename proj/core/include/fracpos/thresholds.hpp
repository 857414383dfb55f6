#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracpos/admissibility.hpp"

namespace fracpos {

/// Sharp depolarizing parameter (k + theta^2) / (k + theta)^2: the map
/// X -> Tr(X) I - t X is alpha-positive iff t <= t_star.
double t_star(const FractionalLevel& level);

/// Isotropic fidelity threshold (k + theta)^2 / (d (k + theta^2)).
double f_d(const FractionalLevel& level);
double f_d(int d, const FractionalLevel& level);

/// Fractional Schmidt index of the isotropic state with fidelity F: the
/// unique alpha with f_d(alpha) = F, or 1 when F <= 1/d.
double fsn_isotropic(double fidelity, int d);

/// Stability index of X -> Tr(X) I - t X on M_d: the unique alpha with
/// t_star(alpha) = t, d on the completely positive range t <= 1/d.
double tau_depolarizing(double t, int d);

struct ProfileSample {
  double alpha;
  double t_star;
  double f_d;
};

struct ThresholdProfile {
  int d = 2;
  std::vector<ProfileSample> samples;
};

/// Tabulates (alpha, t_star, f_d) over a strictly increasing grid in [1, d]
/// and checks monotonicity and f_d * d * t_star = 1 on the result.
ThresholdProfile profile_sweep(int d, const std::vector<double>& grid);

/// Violations of the profile invariants, empty when the profile is sound.
std::vector<std::string> validate_profile(const ThresholdProfile& profile,
                                          double reciprocity_tol = 1e-12);

/// CSV with header "alpha,t_star,f_d", shortest round-trip doubles.
void write_profile_csv(std::ostream& os, const ThresholdProfile& profile);

}  // namespace fracpos
