#pragma once

#include <nlohmann/json_fwd.hpp>

#include "pivotlab/circuit.hpp"
#include "pivotlab/klee_minty.hpp"
#include "pivotlab/oracle.hpp"
#include "pivotlab/rule_r.hpp"
#include "pivotlab/rules.hpp"
#include "pivotlab/shadow.hpp"
#include "pivotlab/visit.hpp"

namespace pivotlab {

// Wire formats. Rationals travel as strings "p/q" ("p" when q = 1); costs
// as objects {"finite","M"}; bases as sorted 1-based index arrays; bit
// strings as "0101" words.

nlohmann::json rational_to_json(const Rational& v);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json bigm_to_json(const BigMScalar& v);
BigMScalar bigm_from_json(const nlohmann::json& j);

nlohmann::json lp_to_json(const LinearProgram& lp);
LinearProgram lp_from_json(const nlohmann::json& j);  // validates on load

nlohmann::json basis_to_json(const Basis& b);
Basis basis_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);  // validates on load

/// Instance JSON plus the sidecar vertex map {bits -> basis}.
nlohmann::json km_map_to_json(const KleeMintyInstance& inst);

nlohmann::json classification_to_json(const Classification& c);
nlohmann::json verdict_to_json(const Verdict& v);

/// One JSON-lines record per visited basis; the final record carries the
/// verdict.
std::string trace_to_jsonl(const PathTrace& t);

nlohmann::json reduction_to_json(const ReductionInstance& inst);

nlohmann::json oracle_result_to_json(const BruteForceResult& r);

nlohmann::json interval_to_json(const LambdaInterval& iv);

LinearProgram load_lp_file(const std::string& path);
Circuit load_circuit_file(const std::string& path);
nlohmann::json load_json_file(const std::string& path);

}  // namespace pivotlab
