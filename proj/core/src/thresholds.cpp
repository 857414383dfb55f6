#include "fracpos/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "fracpos/errors.hpp"
#include "fracpos/format.hpp"

namespace fracpos {

namespace {

// Breakpoint products like (k/d)*d land within a few ulps of an integer.
double snap_to_integer(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 8.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
    return nearest;
  }
  return x;
}

double clamp_discriminant(double disc) {
  if (disc < 0.0 && disc > -1e-14) return 0.0;
  return disc;
}

}  // namespace

double t_star(const FractionalLevel& level) {
  const double k = level.k();
  const double theta = level.theta();
  return (k + theta * theta) / ((k + theta) * (k + theta));
}

double f_d(const FractionalLevel& level) { return f_d(level.d(), level); }

double f_d(int d, const FractionalLevel& level) {
  if (d < 1) throw DomainError("d must be positive");
  if (level.alpha() > d) throw DomainError("alpha exceeds d");
  const double k = level.k();
  const double theta = level.theta();
  return (k + theta) * (k + theta) / (d * (k + theta * theta));
}

double fsn_isotropic(double fidelity, int d) {
  if (d < 2) throw DomainError("fractional Schmidt index needs d >= 2");
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw DomainError("fidelity " + format_double(fidelity) + " outside [0,1]");
  }
  const double x = snap_to_integer(fidelity * d);  // F d
  if (x <= 1.0) return 1.0;
  const int k = std::min(static_cast<int>(std::floor(x)), d - 1);
  if (x == k) return k;
  // Smaller root of (Fd-1) th^2 - 2k th + k(Fd-k) = 0, written as
  // k(Fd-k) / (k + sqrt(disc)) to avoid cancellation near th = 0.
  const double disc = clamp_discriminant(k * k - k * (x - 1.0) * (x - k));
  if (disc < 0.0) throw DomainError("negative discriminant inverting f_d");
  const double theta = k * (x - k) / (k + std::sqrt(disc));
  return k + theta;
}

double tau_depolarizing(double t, int d) {
  if (d < 2) throw DomainError("stability index needs d >= 2");
  if (!std::isfinite(t)) throw DomainError("t must be finite");
  if (t > 1.0) throw DomainError("t = " + format_double(t) + " exceeds 1");
  if (t <= 0.0) return d;
  if (t <= 1.0 / d) return d;
  if (t == 1.0) return 1.0;
  const double inv = snap_to_integer(1.0 / t);
  const int k = std::clamp(static_cast<int>(std::floor(inv)), 1, d - 1);
  if (inv == k) return k;
  // theta = (tk - sqrt(k(t(k+1)-1))) / (1-t) rationalized to
  // k(1 - tk) / (tk + sqrt(k(t(k+1)-1))).
  const double disc = clamp_discriminant(k * (t * (k + 1) - 1.0));
  if (disc < 0.0) throw DomainError("negative discriminant inverting t_star");
  const double theta = k * (1.0 - t * k) / (t * k + std::sqrt(disc));
  return k + theta;
}

std::vector<std::string> validate_profile(const ThresholdProfile& profile,
                                          double reciprocity_tol) {
  std::vector<std::string> problems;
  const auto& s = profile.samples;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double recip = s[i].f_d * profile.d * s[i].t_star;
    if (std::abs(recip - 1.0) > reciprocity_tol) {
      problems.push_back("reciprocity violated at alpha=" + format_double(s[i].alpha) +
                         ": f_d*d*t_star=" + format_double(recip));
    }
    if (i > 0) {
      if (!(s[i].t_star < s[i - 1].t_star)) {
        problems.push_back("t_star not strictly decreasing at alpha=" +
                           format_double(s[i].alpha));
      }
      if (!(s[i].f_d > s[i - 1].f_d)) {
        problems.push_back("f_d not strictly increasing at alpha=" + format_double(s[i].alpha));
      }
    }
  }
  return problems;
}

ThresholdProfile profile_sweep(int d, const std::vector<double>& grid) {
  if (d < 1) throw DomainError("d must be positive");
  if (grid.empty()) throw DomainError("empty alpha grid");
  ThresholdProfile profile{d, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw DomainError("alpha grid must be strictly increasing");
    }
    const auto level = FractionalLevel::make(grid[i], d);
    profile.samples.push_back({grid[i], t_star(level), f_d(level)});
  }
  if (auto problems = validate_profile(profile); !problems.empty()) {
    throw VerificationError(problems.front());
  }
  return profile;
}

void write_profile_csv(std::ostream& os, const ThresholdProfile& profile) {
  os << "alpha,t_star,f_d\n";
  for (const auto& s : profile.samples) {
    os << format_double(s.alpha) << ',' << format_double(s.t_star) << ','
       << format_double(s.f_d) << '\n';
  }
}

}  // namespace fracpos
