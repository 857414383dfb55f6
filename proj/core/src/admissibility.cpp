#include "fracpos/admissibility.hpp"

#include <cmath>
#include <sstream>

#include "fracpos/errors.hpp"

namespace fracpos {

FractionalLevel FractionalLevel::make(double alpha, int d) {
  if (d < 1) throw DomainError("ambient dimension d must be at least 1");
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  const double nearest = std::round(alpha);
  if (std::abs(alpha - nearest) <= 1e-12) alpha = nearest;
  if (alpha < 1.0) {
    std::ostringstream os;
    os << "alpha below 1: " << alpha;
    throw DomainError(os.str());
  }
  if (alpha > d) {
    std::ostringstream os;
    os << "alpha " << alpha << " exceeds d = " << d;
    throw DomainError(os.str());
  }
  const int k = static_cast<int>(std::floor(alpha));
  const double theta = alpha - k;
  const int r = theta == 0.0 ? k : k + 1;
  return {alpha, k, theta, r, d};
}

AdmissibilityReport check_spectrum(const SchmidtSpectrum& s, const FractionalLevel& level,
                                   double tol) {
  AdmissibilityReport rep;
  rep.spectrum = s;
  const int k = level.k();
  const int r = level.r();
  const double top = s.size() > 0 ? s[0] : 0.0;

  rep.rank_ok = r >= s.size() || s[r] <= tol * top;

  const double next = k < s.size() ? s[k] : 0.0;
  const double head = s.head_sum(k);
  rep.observed_ratio = head > 0.0 ? k * next / head : 0.0;
  if (level.is_integer()) {
    rep.ratio_ok = next <= tol * top;
  } else {
    rep.ratio_ok = next <= level.ratio_bound() * head + tol;
  }
  rep.admissible = rep.rank_ok && rep.ratio_ok;
  return rep;
}

AdmissibilityReport is_admissible_vector(const BipartiteVector& psi, const FractionalLevel& level,
                                         double tol) {
  const double nrm = psi.norm();
  if (nrm == 0.0) throw DomainError("zero vector is not a unit vector");
  if (std::abs(nrm - 1.0) > tol) {
    std::ostringstream os;
    os << "vector norm " << nrm << " deviates from 1 beyond tolerance " << tol;
    throw DomainError(os.str());
  }
  auto rep = check_spectrum(schmidt_spectrum(psi.normalized()), level, tol);
  rep.input_norm = nrm;
  return rep;
}

AdmissibilityReport is_admissible_matrix(const ComplexMatrix& a, const FractionalLevel& level,
                                         double tol) {
  if (a.size() == 0) throw ShapeError("empty matrix");
  const RealVector sv = singular_values(a);
  SchmidtSpectrum raw;
  raw.values.assign(sv.data(), sv.data() + sv.size());
  const double fro = a.norm();
  if (fro == 0.0) {
    AdmissibilityReport rep = check_spectrum(raw, level, tol);
    rep.input_norm = 0.0;
    return rep;
  }
  SchmidtSpectrum unit = raw;
  for (double& v : unit.values) v /= fro;
  AdmissibilityReport rep = check_spectrum(unit, level, tol);
  rep.spectrum = std::move(raw);
  rep.input_norm = fro;
  return rep;
}

double nuclear_ky_fan_ratio(const ComplexMatrix& a, int k) {
  const RealVector sv = singular_values(a);
  if (sv.size() == 0 || sv(0) == 0.0) throw DomainError("Ky-Fan ratio of the zero matrix");
  if (k < 1 || k > sv.size()) throw DomainError("Ky-Fan index out of range");
  return sv.sum() / sv.head(k).sum();
}

bool ky_fan_ratio_check(const ComplexMatrix& a, const FractionalLevel& level, double tol) {
  if (numerical_rank(a) > level.k() + 1) {
    throw DomainError("Ky-Fan ratio test requires rank <= k+1");
  }
  const int k = std::min<int>(level.k(), static_cast<int>(std::min(a.rows(), a.cols())));
  return nuclear_ky_fan_ratio(a, k) <= 1.0 + level.ratio_bound() + tol;
}

std::vector<double> extremal_weights(const FractionalLevel& level) {
  const int k = level.k();
  const double theta = level.theta();
  const double a = 1.0 / std::sqrt(k + theta * theta);
  std::vector<double> w(k, a);
  if (!level.is_integer()) w.push_back(theta * a);
  return w;
}

BipartiteVector extremal_vector(const FractionalLevel& level, BipartiteDims dims) {
  if (level.r() > dims.d()) {
    throw DomainError("level needs Schmidt rank " + std::to_string(level.r()) +
                      " but d = " + std::to_string(dims.d()));
  }
  const auto w = extremal_weights(level);
  ComplexVector c = ComplexVector::Zero(dims.total());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const int i = static_cast<int>(j);
    c(i * dims.m + i) = w[j];
  }
  return {dims, std::move(c)};
}

StrictInclusionPair strict_inclusion_pair(int k, double theta, BipartiteDims dims) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theta must lie in (0,1)");
  if (k + 1 > dims.d()) throw DomainError("need k+1 <= d");

  const auto level = FractionalLevel::make(k + theta, dims.d());
  const double theta_prime = 0.5 * (1.0 + theta);
  const auto level_prime = FractionalLevel::make(k + theta_prime, dims.d());
  const auto lower = FractionalLevel::integer(k, dims.d());
  const auto upper = FractionalLevel::integer(k + 1, dims.d());

  StrictInclusionPair out{level, theta_prime, extremal_vector(level, dims),
                          extremal_vector(level_prime, dims)};

  if (!is_admissible_vector(out.psi_theta, level).admissible ||
      is_admissible_vector(out.psi_theta, lower).admissible ||
      !is_admissible_vector(out.psi_theta_prime, upper).admissible ||
      is_admissible_vector(out.psi_theta_prime, level).admissible) {
    throw VerificationError("strict inclusion pair failed verification");
  }
  return out;
}

}  // namespace fracpos
