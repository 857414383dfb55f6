#pragma once

// JSON encodings.
//
//   matrix:    {"rows": R, "cols": C, "re": [[..]], "im": [[..]]}
//   vector:    matrix fields with cols = 1, rows = n*m, plus {"n": n, "m": m}
//   operator:  matrix fields plus {"n": n, "m": m} (Choi: n input, m output)
//   kraus:     JSON array of matrices
//   optimizer: {"starts": int, "max_iters": int, "seed": int, "tol": real}
//
// Decoders throw ParseError on missing fields, wrong types, ragged rows,
// shape mismatches and non-finite numbers.

#include <nlohmann/json.hpp>

#include "fracpos/admissibility.hpp"
#include "fracpos/choi.hpp"
#include "fracpos/cones.hpp"
#include "fracpos/counterexamples.hpp"

namespace fracpos::io {

using nlohmann::json;

json to_json(const ComplexMatrix& x);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const BipartiteVector& psi);
BipartiteVector vector_from_json(const json& j);

json to_json(const BipartiteOperator& op);
BipartiteOperator operator_from_json(const json& j);

json to_json(const KrausList& ks);
KrausList kraus_from_json(const json& j);

json to_json(const OptimizerConfig& cfg);
OptimizerConfig optimizer_config_from_json(const json& j);

json to_json(const FractionalLevel& level);
json to_json(const SchmidtSpectrum& s);
json to_json(const AdmissibilityReport& rep);
json to_json(const KrausCertificate& cert);
json to_json(const LambdaEstimate& est);
json to_json(const StrictInclusionReport& rep);
json to_json(const CpFailureCertificate& cert);

/// Parses text, mapping JSON syntax errors to ParseError.
json parse(const std::string& text);

}  // namespace fracpos::io
