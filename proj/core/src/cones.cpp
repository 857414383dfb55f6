#include "fracpos/cones.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracpos/errors.hpp"
#include "fracpos/thresholds.hpp"

namespace fracpos {

namespace {

// Slack for sign tests on isotropic coefficients, relative to their scale.
constexpr double kSliceTol = 1e-12;

double slice_scale(const IsotropicCoefficients& c) {
  return std::max({1.0, std::abs(c.a), std::abs(c.b)});
}

void require_level_dim(int d, const FractionalLevel& level) {
  if (level.d() != d) {
    throw ShapeError("level was built for d = " + std::to_string(level.d()) +
                     ", operator has d = " + std::to_string(d));
  }
}

}  // namespace

bool IsotropicCoefficients::is_psd(double tol) const {
  const double slack = tol * slice_scale(*this);
  return a >= -slack && a + b >= -slack;
}

double IsotropicCoefficients::fidelity() const {
  const double tr = trace();
  if (tr == 0.0) throw DomainError("fidelity of a traceless isotropic operator");
  return (a + b) / tr;
}

HermitianOperator IsotropicCoefficients::to_operator() const {
  const BipartiteDims dims = BipartiteDims::square(d);
  const ComplexVector w = BipartiteVector::omega(dims).coeffs();
  ComplexMatrix x = a * ComplexMatrix::Identity(dims.total(), dims.total());
  x.noalias() += b * (w * w.adjoint());
  return {dims, x};
}

IsotropicCoefficients isotropic_state(double fidelity, int d) {
  if (d < 2) throw DomainError("isotropic states need d >= 2");
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw DomainError("fidelity outside [0,1]");
  const double a = (1.0 - fidelity) / (static_cast<double>(d) * d - 1.0);
  return {a, fidelity - a, d};
}

double lambda_depolarizing_closed_form(int d, double t, const FractionalLevel& level) {
  if (d < 2) throw DomainError("depolarizing family needs d >= 2");
  if (!(t >= 0.0)) throw DomainError("closed form for lambda is stated only for t >= 0");
  require_level_dim(d, level);
  const double k = level.k();
  const double theta = level.theta();
  return 1.0 - t * (k + theta) * (k + theta) / (k + theta * theta);
}

double mu_alpha_pomega(int d, const FractionalLevel& level) {
  require_level_dim(d, level);
  return f_d(d, level);
}

IsotropicCoefficients twirl_isotropic(const HermitianOperator& x) {
  if (x.dims.n != x.dims.m) throw ShapeError("twirl needs a square bipartite shape");
  const int d = x.dims.n;
  if (d < 2) throw ShapeError("twirl needs d >= 2");
  const ComplexVector w = BipartiteVector::omega(x.dims).coeffs();
  const double tr = x.mat.trace().real();
  const double overlap = w.dot(x.mat * w).real();  // Tr(P_omega X)
  const double dd = static_cast<double>(d) * d;
  const double a = (tr - overlap) / (dd - 1.0);
  return {a, overlap - a, d};
}

bool isotropic_bp_membership(const IsotropicCoefficients& c, const FractionalLevel& level) {
  require_level_dim(c.d, level);
  const double slack = kSliceTol * slice_scale(c);
  return c.a >= -slack && c.a + c.b * f_d(c.d, level) >= -slack;
}

bool isotropic_k_membership(const IsotropicCoefficients& c, const FractionalLevel& level) {
  require_level_dim(c.d, level);
  if (!c.is_psd(kSliceTol)) return false;
  const double slack = kSliceTol * slice_scale(c);
  if (std::abs(c.trace()) <= slack) return true;  // apex
  return c.fidelity() <= f_d(c.d, level) + kSliceTol;
}

HermitianOperator witness_operator(int d, const FractionalLevel& level) {
  require_level_dim(d, level);
  return IsotropicCoefficients{1.0, -1.0 / f_d(d, level), d}.to_operator();
}

}  // namespace fracpos
