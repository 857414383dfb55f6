#include "fracpos/io.hpp"

#include <cmath>
#include <string>

#include "fracpos/errors.hpp"

namespace fracpos::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" is not an integer");
  return v.get<int>();
}

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " is not finite");
  return x;
}

Eigen::MatrixXd real_grid(const json& j, const char* name, int rows, int cols) {
  const json& g = field(j, name);
  if (!g.is_array() || static_cast<int>(g.size()) != rows) {
    throw ParseError(std::string("field \"") + name + "\" must have " + std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = g[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw ParseError(std::string("row ") + std::to_string(i) + " of \"" + name + "\" must have " +
                       std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) out(i, c) = finite_number(row[c], name);
  }
  return out;
}

json grid(const Eigen::MatrixXd& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < x.cols(); ++c) row.push_back(x(i, c));
    out.push_back(std::move(row));
  }
  return out;
}

BipartiteDims dims_from(const json& j) {
  const int n = int_field(j, "n");
  const int m = int_field(j, "m");
  if (n < 1 || m < 1) throw ParseError("dims n, m must be positive");
  return {n, m};
}

}  // namespace

json to_json(const ComplexMatrix& x) {
  return {{"rows", x.rows()}, {"cols", x.cols()}, {"re", grid(x.real())}, {"im", grid(x.imag())}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 1 || cols < 1) throw ParseError("rows and cols must be positive");
  const Eigen::MatrixXd re = real_grid(j, "re", rows, cols);
  const Eigen::MatrixXd im = real_grid(j, "im", rows, cols);
  ComplexMatrix out(rows, cols);
  out.real() = re;
  out.imag() = im;
  return out;
}

json to_json(const BipartiteVector& psi) {
  json j = to_json(ComplexMatrix(psi.coeffs()));
  j["n"] = psi.dims().n;
  j["m"] = psi.dims().m;
  return j;
}

BipartiteVector vector_from_json(const json& j) {
  const BipartiteDims dims = dims_from(j);
  const ComplexMatrix x = matrix_from_json(j);
  if (x.cols() != 1 || x.rows() != dims.total()) {
    throw ParseError("vector must be a single column of length n*m");
  }
  return {dims, x.col(0)};
}

json to_json(const BipartiteOperator& op) {
  json j = to_json(op.mat);
  j["n"] = op.dims.n;
  j["m"] = op.dims.m;
  return j;
}

BipartiteOperator operator_from_json(const json& j) {
  const BipartiteDims dims = dims_from(j);
  ComplexMatrix x = matrix_from_json(j);
  if (x.rows() != dims.total() || x.cols() != dims.total()) {
    throw ParseError("operator must be (n*m)x(n*m)");
  }
  return {dims, std::move(x)};
}

json to_json(const KrausList& ks) {
  json out = json::array();
  for (const auto& a : ks.ops()) out.push_back(to_json(a));
  return out;
}

KrausList kraus_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("Kraus list must be a nonempty JSON array");
  std::vector<ComplexMatrix> ops;
  for (const auto& item : j) ops.push_back(matrix_from_json(item));
  try {
    return KrausList(std::move(ops));
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const OptimizerConfig& cfg) {
  return {{"starts", cfg.starts}, {"max_iters", cfg.max_iters}, {"seed", cfg.seed}, {"tol", cfg.tol}};
}

OptimizerConfig optimizer_config_from_json(const json& j) {
  OptimizerConfig cfg;
  cfg.starts = int_field(j, "starts");
  cfg.max_iters = int_field(j, "max_iters");
  const json& seed = field(j, "seed");
  if (!seed.is_number_integer()) throw ParseError("field \"seed\" is not an integer");
  cfg.seed = seed.get<std::uint64_t>();
  cfg.tol = finite_number(field(j, "tol"), "tol");
  if (cfg.starts < 1 || cfg.max_iters < 0 || cfg.tol < 0.0) {
    throw ParseError("optimizer config out of range");
  }
  return cfg;
}

json to_json(const FractionalLevel& level) {
  return {{"alpha", level.alpha()}, {"k", level.k()},   {"theta", level.theta()},
          {"r", level.r()},         {"d", level.d()}};
}

json to_json(const SchmidtSpectrum& s) { return s.values; }

json to_json(const AdmissibilityReport& rep) {
  return {{"admissible", rep.admissible}, {"rank_ok", rep.rank_ok},
          {"ratio_ok", rep.ratio_ok},     {"observed_ratio", rep.observed_ratio},
          {"spectrum", to_json(rep.spectrum)}, {"input_norm", rep.input_norm}};
}

json to_json(const KrausCertificate& cert) {
  json reports = json::array();
  for (const auto& r : cert.reports) reports.push_back(to_json(r));
  return {{"passed", cert.passed},
          {"level", to_json(cert.level)},
          {"reports", std::move(reports)},
          {"failing", cert.failing}};
}

json to_json(const LambdaEstimate& est) {
  return {{"value", est.value},
          {"level", to_json(est.level)},
          {"feasibility_residual", est.feasibility_residual},
          {"starts_used", est.starts_used},
          {"best_start", est.best_start},
          {"argmin", to_json(est.argmin)},
          {"argmin_spectrum", to_json(schmidt_spectrum(est.argmin))}};
}

json to_json(const StrictInclusionReport& rep) {
  return {{"level", to_json(rep.pair.level)},
          {"theta_prime", rep.pair.theta_prime},
          {"psi_theta", to_json(rep.pair.psi_theta)},
          {"psi_theta_prime", to_json(rep.pair.psi_theta_prime)},
          {"psi_theta_at_alpha", to_json(rep.theta_at_alpha)},
          {"psi_theta_at_k", to_json(rep.theta_at_k)},
          {"psi_theta_prime_at_k_plus_1", to_json(rep.prime_at_next)},
          {"psi_theta_prime_at_alpha", to_json(rep.prime_at_alpha)},
          {"witness_value", rep.witness_value},
          {"confirmed", rep.confirmed}};
}

json to_json(const CpFailureCertificate& cert) {
  return {{"d", cert.d},
          {"level", to_json(cert.level)},
          {"t", cert.t},
          {"attenuation", cert.attenuation},
          {"phi", to_json(cert.phi)},
          {"phi_value", cert.phi_value},
          {"psi_tilde", to_json(cert.psi_tilde)},
          {"psi_tilde_norm2", cert.psi_tilde_norm2},
          {"psi_t", to_json(cert.psi_t)},
          {"psi_t_report", to_json(cert.psi_t_report)},
          {"attenuator", to_json(cert.attenuator)},
          {"quadratic_value", cert.quadratic_value},
          {"predicted_value", cert.predicted_value}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace fracpos::io
