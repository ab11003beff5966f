#include "pivotlab/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace pivotlab {

using nlohmann::json;

json rational_to_json(const Rational& v) { return format_rational(v); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::BadInput, "rational must be a string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

json bigm_to_json(const BigMScalar& v) {
  return json{{"finite", format_rational(v.finite)}, {"M", format_rational(v.m_coeff)}};
}

BigMScalar bigm_from_json(const json& j) {
  if (j.is_string()) return BigMScalar(parse_rational(j.get<std::string>()));
  if (!j.is_object() || !j.contains("finite"))
    throw Error(ErrorCode::BadInput, "cost must be {\"finite\",\"M\"} or a rational string");
  BigMScalar out;
  out.finite = parse_rational(j.at("finite").get<std::string>());
  if (j.contains("M")) out.m_coeff = parse_rational(j.at("M").get<std::string>());
  return out;
}

json lp_to_json(const LinearProgram& lp) {
  json rows = json::array();
  for (int i = 0; i < lp.m; ++i) {
    json row = json::array();
    for (int j = 0; j < lp.n; ++j) row.push_back(format_rational(lp.A.at(i, j)));
    rows.push_back(std::move(row));
  }
  json b = json::array();
  for (const Rational& v : lp.b) b.push_back(format_rational(v));
  json c = json::array();
  for (const BigMScalar& v : lp.c) c.push_back(bigm_to_json(v));
  json out{{"m", lp.m}, {"n", lp.n}, {"A", std::move(rows)}, {"b", std::move(b)},
           {"c", std::move(c)}};
  if (!lp.names.empty()) out["names"] = lp.names;
  return out;
}

LinearProgram lp_from_json(const json& j) {
  LinearProgram lp;
  try {
    lp.m = j.at("m").get<int>();
    lp.n = j.at("n").get<int>();
    if (lp.m < 1 || lp.n < 1) throw Error(ErrorCode::BadInput, "m and n must be positive");
    lp.A = RatMatrix(lp.m, lp.n);
    const json& rows = j.at("A");
    if (static_cast<int>(rows.size()) != lp.m) throw Error(ErrorCode::BadInput, "A row count");
    for (int i = 0; i < lp.m; ++i) {
      if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != lp.n)
        throw Error(ErrorCode::BadInput, "A column count");
      for (int k = 0; k < lp.n; ++k)
        lp.A.at(i, k) = rational_from_json(rows[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    }
    for (const json& v : j.at("b")) lp.b.push_back(rational_from_json(v));
    for (const json& v : j.at("c")) lp.c.push_back(bigm_from_json(v));
    if (j.contains("names")) lp.names = j.at("names").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed program JSON: ") + e.what());
  }
  lp.validate();
  return lp;
}

json basis_to_json(const Basis& b) { return json(b.cols); }

Basis basis_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadInput, "basis must be an index array");
  try {
    return Basis(j.get<std::vector<int>>());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::BadInput, e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed basis JSON: ") + e.what());
  }
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (size_t g = 0; g < c.gates.size(); ++g) {
    const Gate& gate = c.gates[g];
    json item{{"id", g}, {"op", gate_op_name(gate.op)}};
    if (gate.op == Gate::Op::Not) item["args"] = json::array({gate.a});
    if (gate.op == Gate::Op::And || gate.op == Gate::Op::Or)
      item["args"] = json::array({gate.a, gate.b});
    gates.push_back(std::move(item));
  }
  return json{{"n", c.n}, {"gates", std::move(gates)}, {"outputs", c.outputs}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  try {
    c.n = j.at("n").get<int>();
    const json& gates = j.at("gates");
    c.gates.resize(gates.size());
    for (const json& item : gates) {
      const int id = item.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(c.gates.size()))
        throw Error(ErrorCode::BadInput, "gate id out of range");
      Gate gate;
      gate.op = gate_op_from_name(item.at("op").get<std::string>());
      if (gate.op != Gate::Op::Input) {
        const auto args = item.at("args").get<std::vector<int>>();
        const size_t arity = gate.op == Gate::Op::Not ? 1 : 2;
        if (args.size() != arity) throw Error(ErrorCode::BadInput, "gate arity mismatch");
        gate.a = args[0];
        if (arity == 2) gate.b = args[1];
      }
      c.gates[static_cast<size_t>(id)] = gate;
    }
    c.outputs = j.at("outputs").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed circuit JSON: ") + e.what());
  }
  c.validate();
  return c;
}

json km_map_to_json(const KleeMintyInstance& inst) {
  json map = json::object();
  const uint64_t total = uint64_t{1} << inst.d;
  for (uint64_t v = 0; v < total; ++v) {
    BitString bits = gray_unrank(inst.d, v);  // any enumeration of words works
    map[bits.to_string()] = basis_to_json(inst.vertex_basis(bits));
  }
  return json{{"d", inst.d}, {"eps", format_rational(inst.eps)}, {"map", std::move(map)}};
}

json classification_to_json(const Classification& c) {
  json out{{"kind", classification_name(c.kind)}};
  if (c.kind == Classification::Kind::Unbounded) out["column"] = c.witness;
  if (c.kind == Classification::Kind::Infeasible) out["row"] = c.witness;
  return out;
}

json verdict_to_json(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Terminal:
      return json{{"verdict", "Terminal"}, {"classification", classification_to_json(v.classification)}};
    case Verdict::Kind::StepCapExceeded:
      return json{{"verdict", "StepCapExceeded"}};
    case Verdict::Kind::RuleError:
      return json{{"verdict", "RuleError"}, {"error", error_code_name(v.error)}};
  }
  return {};
}

std::string trace_to_jsonl(const PathTrace& t) {
  std::ostringstream out;
  for (size_t i = 0; i < t.bases.size(); ++i) {
    json rec{{"basis", basis_to_json(t.bases[i])}, {"potential", bigm_to_json(t.potentials[i])}};
    if (i > 0) {
      rec["entering"] = t.entering[i - 1];
      rec["leaving"] = t.leaving[i - 1];
    }
    out << rec.dump() << '\n';
  }
  out << verdict_to_json(t.verdict).dump() << '\n';
  return out.str();
}

json reduction_to_json(const ReductionInstance& inst) {
  return json{{"n", inst.ctx.n()},
              {"x_c", inst.ctx.x_c.to_string()},
              {"cube_dimension", 2 * inst.ctx.n()},
              {"lp", lp_to_json(inst.km.lp)},
              {"B0", basis_to_json(inst.b0)},
              {"B0_bits", inst.b0_bits.to_string()},
              {"B_hat", basis_to_json(inst.b_hat)},
              {"B_hat_bits", inst.b_hat_bits.to_string()}};
}

json oracle_result_to_json(const BruteForceResult& r) {
  json out{{"status", brute_force_kind_name(r.kind)}};
  if (r.kind == BruteForceResult::Kind::Optimal) {
    out["value"] = bigm_to_json(r.value);
    out["basis"] = basis_to_json(r.basis);
  }
  return out;
}

json interval_to_json(const LambdaInterval& iv) {
  if (iv.empty) return json{{"empty", true}};
  return json{{"empty", false}, {"lo", format_rational(iv.lo)}, {"hi", format_rational(iv.hi)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, "cannot parse '" + path + "': " + e.what());
  }
  return j;
}

LinearProgram load_lp_file(const std::string& path) { return lp_from_json(load_json_file(path)); }

Circuit load_circuit_file(const std::string& path) {
  return circuit_from_json(load_json_file(path));
}

}  // namespace pivotlab
