#include "pivotlab/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include "pivotlab/json_io.hpp"

namespace pivotlab {

using nlohmann::json;

namespace {

void print_result(const json& j, const std::string& format, std::ostream& out) {
  if (format == "table") {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << it.key() << ": ";
      if (it.value().is_string())
        out << it.value().get<std::string>();
      else
        out << it.value().dump();
      out << '\n';
    }
    return;
  }
  out << j.dump(2) << '\n';
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::BadInput, "cannot write '" + path + "'");
  file << text;
}

Basis parse_basis_arg(const std::string& text) {
  std::vector<int> cols;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!token.empty()) cols.push_back(std::stoi(token));
      token.clear();
    } else {
      token.push_back(ch);
    }
  }
  try {
    return Basis(std::move(cols));
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::BadInput, e.what());
  }
}

/// Shared circuit source: an explicit JSON file or a bundled family.
struct CircuitArgs {
  std::string path;
  std::string family;
  int width = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--circuit", path, "circuit JSON file");
    cmd->add_option("--family", family,
                    "bundled family: gray-successor | toggle-last | lowest-zero-walker");
    cmd->add_option("--n", width, "width for --family");
  }

  Circuit load(int fallback_width = 0) const {
    if (!path.empty()) return load_circuit_file(path);
    if (family.empty())
      throw Error(ErrorCode::BadInput, "need --circuit FILE or --family NAME");
    const int n = width > 0 ? width : fallback_width;
    if (n <= 0) throw Error(ErrorCode::BadInput, "--family needs --n");
    if (family == "gray-successor") return gray_successor_circuit(n);
    if (family == "toggle-last") return toggle_last_circuit(n);
    if (family == "lowest-zero-walker") return lowest_zero_walker_circuit(n);
    throw Error(ErrorCode::BadInput, "unknown family '" + family + "'");
  }
};

json original_status_after_bigm(const Verdict& v) {
  if (v.kind != Verdict::Kind::Terminal) return json{{"status", "Unresolved"}};
  switch (v.classification.kind) {
    case Classification::Kind::Optimal:
      return json{{"status", "pending"}};  // caller fills in using the value
    case Classification::Kind::Unbounded:
      return json{{"status", "UnboundedIfFeasible"}};
    case Classification::Kind::Infeasible:
      return json{{"status", "Infeasible"}};
    default:
      return json{{"status", "Unresolved"}};
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pivotlab: exact simplex pivoting-rule laboratory"};
  app.require_subcommand(1);

  std::string format = "json";
  uint64_t seed = 0;
  app.add_option("--format", format, "json | table")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();

  std::function<void()> action;

  // km-gen
  {
    auto* cmd = app.add_subcommand("km-gen", "emit a Klee-Minty cube and its vertex map");
    auto d = std::make_shared<int>(3);
    auto eps = std::make_shared<std::string>("1/3");
    auto out_path = std::make_shared<std::string>();
    auto map_path = std::make_shared<std::string>();
    cmd->add_option("--d", *d, "dimension")->required();
    cmd->add_option("--eps", *eps, "distortion, 0 < eps < 1/2")->capture_default_str();
    cmd->add_option("--out", *out_path, "program JSON file (stdout when absent)");
    cmd->add_option("--map-out", *map_path, "vertex map sidecar file");
    cmd->callback([&, d, eps, out_path, map_path] {
      action = [&, d, eps, out_path, map_path] {
        if (*d > 20) throw Error(ErrorCode::TooLarge, "vertex map above d = 20 is impractical");
        KleeMintyInstance inst = km_instance(*d, parse_rational(*eps));
        if (out_path->empty()) {
          out << json{{"lp", lp_to_json(inst.lp)}, {"vertex_map", km_map_to_json(inst)}}.dump(2)
              << '\n';
          return;
        }
        write_text(*out_path, lp_to_json(inst.lp).dump(2) + "\n", out);
        const std::string side = map_path->empty() ? *out_path + ".map.json" : *map_path;
        write_text(side, km_map_to_json(inst).dump(2) + "\n", out);
      };
    });
  }

  // gray
  {
    auto* cmd = app.add_subcommand("gray", "Gray-code rank / unrank / succ / pred");
    auto op = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>();
    auto d = std::make_shared<int>(0);
    auto k = std::make_shared<uint64_t>(0);
    cmd->add_option("--op", *op, "rank | unrank | succ | pred")->required();
    cmd->add_option("--x", *x, "bit string");
    cmd->add_option("--d", *d, "length (unrank)");
    cmd->add_option("--k", *k, "rank (unrank)");
    cmd->callback([&, op, x, d, k] {
      action = [&, op, x, d, k] {
        json result;
        if (*op == "rank") {
          result = json{{"rank", gray_rank(BitString::from_string(*x))}};
        } else if (*op == "unrank") {
          result = json{{"word", gray_unrank(*d, *k).to_string()}};
        } else if (*op == "succ") {
          result = json{{"word", gray_succ(BitString::from_string(*x)).to_string()}};
        } else if (*op == "pred") {
          result = json{{"word", gray_pred(BitString::from_string(*x)).to_string()}};
        } else {
          throw Error(ErrorCode::BadInput, "unknown --op '" + *op + "'");
        }
        print_result(result, format, out);
      };
    });
  }

  // solve
  {
    auto* cmd = app.add_subcommand("solve", "run a rule to a terminal basis");
    auto lp_path = std::make_shared<std::string>();
    auto rule_name = std::make_shared<std::string>("dantzig");
    auto cap = std::make_shared<uint64_t>(100000);
    auto start = std::make_shared<std::string>();
    auto b0 = std::make_shared<std::string>();
    cmd->add_option("--lp", *lp_path, "program JSON")->required();
    cmd->add_option("--rule", *rule_name, "pivoting rule")->capture_default_str();
    cmd->add_option("--cap", *cap, "pivot budget")->capture_default_str();
    cmd->add_option("--start", *start, "explicit start basis, e.g. \"1,3\"");
    cmd->add_option("--b0", *b0, "shadow-vertex start basis");
    cmd->callback([&, lp_path, rule_name, cap, start, b0] {
      action = [&, lp_path, rule_name, cap, start, b0] {
        LinearProgram lp = load_lp_file(*lp_path);
        RuleKind kind = rule_kind_from_name(*rule_name);
        json result{{"rule", *rule_name}};
        PathTrace t;
        if (kind == RuleKind::ShadowVertex) {
          Basis basis0 = b0->empty() ? [&] {
            std::vector<int> cols0 = greedy_column_basis(lp.A);
            for (int& c : cols0) ++c;
            return Basis(cols0);
          }()
                                     : parse_basis_arg(*b0);
          ShadowHomotopy h = make_homotopy(lp, basis0);
          t = trace_shadow(lp, h, *cap);
          result["homotopy_b0"] = basis_to_json(basis0);
        } else if (!is_primal_rule(kind)) {
          throw Error(ErrorCode::BadInput, "solve runs the primal rules or shadow-vertex");
        } else if (!start->empty()) {
          t = trace(lp, parse_basis_arg(*start), Rule{kind, seed}, *cap);
        } else {
          BigMProgram big = big_m_transform(lp);
          t = trace(big, Rule{kind, seed}, *cap);
          result["big_m"] = true;
          json original = original_status_after_bigm(t.verdict);
          if (original.at("status") == "pending") {
            const BigMScalar& value = t.potentials.back();
            original = value.m_coeff == 0
                           ? json{{"status", "Optimal"}, {"value", format_rational(value.finite)}}
                           : json{{"status", "Infeasible"}};
          }
          result["original"] = original;
        }
        result["steps"] = t.steps();
        result["verdict"] = verdict_to_json(t.verdict);
        if (!t.bases.empty()) {
          result["basis"] = basis_to_json(t.bases.back());
          result["objective"] = bigm_to_json(t.potentials.back());
        }
        print_result(result, format, out);
      };
    });
  }

  // trace
  {
    auto* cmd = app.add_subcommand("trace", "emit the walk as JSON lines");
    auto lp_path = std::make_shared<std::string>();
    auto rule_name = std::make_shared<std::string>("dantzig");
    auto cap = std::make_shared<uint64_t>(100000);
    auto start = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--lp", *lp_path, "program JSON")->required();
    cmd->add_option("--rule", *rule_name, "primal rule")->capture_default_str();
    cmd->add_option("--cap", *cap, "pivot budget")->capture_default_str();
    cmd->add_option("--start", *start, "explicit start basis");
    cmd->add_option("--out", *out_path, "output file (stdout when absent)");
    cmd->callback([&, lp_path, rule_name, cap, start, out_path] {
      action = [&, lp_path, rule_name, cap, start, out_path] {
        LinearProgram lp = load_lp_file(*lp_path);
        RuleKind kind = rule_kind_from_name(*rule_name);
        if (!is_primal_rule(kind))
          throw Error(ErrorCode::BadInput, "trace covers the primal rules");
        PathTrace t = start->empty()
                          ? trace(big_m_transform(lp), Rule{kind, seed}, *cap)
                          : trace(lp, parse_basis_arg(*start), Rule{kind, seed}, *cap);
        write_text(*out_path, trace_to_jsonl(t), out);
      };
    });
  }

  // member
  {
    auto* cmd = app.add_subcommand("member", "does the walk visit the given basis?");
    auto lp_path = std::make_shared<std::string>();
    auto rule_name = std::make_shared<std::string>("dantzig");
    auto cap = std::make_shared<uint64_t>(100000);
    auto basis_text = std::make_shared<std::string>();
    auto start = std::make_shared<std::string>();
    cmd->add_option("--lp", *lp_path, "program JSON")->required();
    cmd->add_option("--rule", *rule_name, "primal rule")->capture_default_str();
    cmd->add_option("--basis", *basis_text, "query basis")->required();
    cmd->add_option("--cap", *cap, "pivot budget")->capture_default_str();
    cmd->add_option("--start", *start, "explicit start basis");
    cmd->callback([&, lp_path, rule_name, cap, basis_text, start] {
      action = [&, lp_path, rule_name, cap, basis_text, start] {
        LinearProgram lp = load_lp_file(*lp_path);
        RuleKind kind = rule_kind_from_name(*rule_name);
        if (!is_primal_rule(kind))
          throw Error(ErrorCode::BadInput, "member covers the primal rules");
        Basis query = parse_basis_arg(*basis_text);
        MemberVerdict v = start->empty()
                              ? path_member(big_m_transform(lp), Rule{kind, seed}, query, *cap)
                              : path_member(lp, parse_basis_arg(*start), Rule{kind, seed}, query,
                                            *cap);
        print_result(json{{"member", member_verdict_name(v)}}, format, out);
      };
    });
  }

  // shadow-member
  {
    auto* cmd = app.add_subcommand("shadow-member", "lambda-interval membership test");
    auto lp_path = std::make_shared<std::string>();
    auto basis_text = std::make_shared<std::string>();
    auto b0 = std::make_shared<std::string>();
    cmd->add_option("--lp", *lp_path, "program JSON")->required();
    cmd->add_option("--basis", *basis_text, "query basis")->required();
    cmd->add_option("--b0", *b0, "homotopy start basis (greedy when absent)");
    cmd->callback([&, lp_path, basis_text, b0] {
      action = [&, lp_path, basis_text, b0] {
        LinearProgram lp = load_lp_file(*lp_path);
        Basis basis0 = b0->empty() ? [&] {
          std::vector<int> cols0 = greedy_column_basis(lp.A);
          for (int& c : cols0) ++c;
          return Basis(cols0);
        }()
                                   : parse_basis_arg(*b0);
        ShadowHomotopy h = make_homotopy(lp, basis0);
        LambdaInterval iv = lambda_interval(lp, h, parse_basis_arg(*basis_text));
        print_result(json{{"member", !iv.empty}, {"interval", interval_to_json(iv)}}, format, out);
      };
    });
  }

  // circuit-eval
  {
    auto* cmd = app.add_subcommand("circuit-eval", "evaluate a circuit on a word");
    auto circ = std::make_shared<CircuitArgs>();
    auto x = std::make_shared<std::string>();
    auto emit = std::make_shared<std::string>();
    circ->attach(cmd);
    cmd->add_option("--x", *x, "input word")->required();
    cmd->add_option("--emit-circuit", *emit, "also write the circuit JSON here");
    cmd->callback([&, circ, x, emit] {
      action = [&, circ, x, emit] {
        BitString input = BitString::from_string(*x);
        Circuit c = circ->load(input.size());
        if (!emit->empty()) write_text(*emit, circuit_to_json(c).dump(2) + "\n", out);
        print_result(json{{"output", eval_circuit(c, input).to_string()}}, format, out);
      };
    });
  }

  // cpath-member
  {
    auto* cmd = app.add_subcommand("cpath-member", "is the word on the circuit walk from 0^n?");
    auto circ = std::make_shared<CircuitArgs>();
    auto xc = std::make_shared<std::string>();
    auto cap = std::make_shared<uint64_t>(0);
    circ->attach(cmd);
    cmd->add_option("--xc", *xc, "query word")->required();
    cmd->add_option("--cap", *cap, "step budget (default 2^n)");
    cmd->callback([&, circ, xc, cap] {
      action = [&, circ, xc, cap] {
        BitString target = BitString::from_string(*xc);
        Circuit c = circ->load(target.size());
        PathVerdict v = c_path_member(c, target, *cap);
        print_result(json{{"verdict", v == PathVerdict::Yes ? "Yes" : "No"}}, format, out);
      };
    });
  }

  // reduce
  {
    auto* cmd = app.add_subcommand("reduce", "package a walk query as a cube basis query");
    auto circ = std::make_shared<CircuitArgs>();
    auto xc = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    circ->attach(cmd);
    cmd->add_option("--xc", *xc, "query word")->required();
    cmd->add_option("--out", *out_path, "output file (stdout when absent)");
    cmd->callback([&, circ, xc, out_path] {
      action = [&, circ, xc, out_path] {
        BitString target = BitString::from_string(*xc);
        ReductionInstance inst = build_reduction(circ->load(target.size()), target);
        write_text(*out_path, reduction_to_json(inst).dump(2) + "\n", out);
      };
    });
  }

  // r-simulate
  {
    auto* cmd = app.add_subcommand("r-simulate", "run the constructed rule on its cube");
    auto circ = std::make_shared<CircuitArgs>();
    auto xc = std::make_shared<std::string>();
    auto variant = std::make_shared<std::string>("repaired");
    auto cap = std::make_shared<uint64_t>(0);
    circ->attach(cmd);
    cmd->add_option("--xc", *xc, "query word")->required();
    cmd->add_option("--variant", *variant, "paper | repaired")->capture_default_str();
    cmd->add_option("--cap", *cap, "step budget (default 2^{2n+2})");
    cmd->callback([&, circ, xc, variant, cap] {
      action = [&, circ, xc, variant, cap] {
        BitString target = BitString::from_string(*xc);
        ReductionInstance inst = build_reduction(circ->load(target.size()), target);
        RuleRVariant var = *variant == "paper" ? RuleRVariant::Paper : RuleRVariant::Repaired;
        if (*variant != "paper" && *variant != "repaired")
          throw Error(ErrorCode::BadInput, "--variant must be paper or repaired");
        RPathResult run = r_path_member(var, inst, *cap, /*keep_states=*/true);
        for (const BitString& s : run.states)
          out << json{{"state", s.to_string()},
                      {"objective", format_rational(inst.km.vertex_objective(s))}}
                     .dump()
              << '\n';
        json diags = json::array();
        for (const RuleRDiagnosticEvent& e : run.diagnostics)
          diags.push_back(json{{"kind", rule_r_diagnostic_name(e.kind)},
                               {"step", e.step},
                               {"state", e.state.to_string()}});
        out << json{{"verdict", r_verdict_name(run.verdict)},
                    {"visited_target", run.visited_target},
                    {"steps", run.steps},
                    {"diagnostics", std::move(diags)}}
                   .dump()
            << '\n';
      };
    });
  }

  // verify-reduction
  {
    auto* cmd = app.add_subcommand("verify-reduction", "run both sides and compare");
    auto circ = std::make_shared<CircuitArgs>();
    auto xc = std::make_shared<std::string>();
    auto variant = std::make_shared<std::string>("repaired");
    auto cap = std::make_shared<uint64_t>(0);
    circ->attach(cmd);
    cmd->add_option("--xc", *xc, "query word")->required();
    cmd->add_option("--variant", *variant, "paper | repaired")->capture_default_str();
    cmd->add_option("--cap", *cap, "step budget");
    cmd->callback([&, circ, xc, variant, cap] {
      action = [&, circ, xc, variant, cap] {
        BitString target = BitString::from_string(*xc);
        Circuit c = circ->load(target.size());
        PathVerdict cv = c_path_member(c, target);
        if (target.all_zero()) {
          print_result(json{{"c_path", "Yes"}, {"r_path", "Yes"}, {"agree", true},
                            {"note", "trivial query: the walk starts at the all-zero word"}},
                       format, out);
          return;
        }
        ReductionInstance inst = build_reduction(c, target);
        RuleRVariant var = *variant == "paper" ? RuleRVariant::Paper : RuleRVariant::Repaired;
        RPathResult run = r_path_member(var, inst, *cap);
        const bool c_yes = cv == PathVerdict::Yes;
        print_result(json{{"c_path", c_yes ? "Yes" : "No"},
                          {"r_path", r_verdict_name(run.verdict)},
                          {"visited_target", run.visited_target},
                          {"diagnostics", run.diagnostics.size()},
                          {"agree", (run.verdict == RVerdict::Yes) == c_yes &&
                                        run.diagnostics.empty()}},
                     format, out);
      };
    });
  }

  // estimate-visit
  {
    auto* cmd = app.add_subcommand("estimate-visit", "Monte Carlo visit probability");
    auto lp_path = std::make_shared<std::string>();
    auto basis_text = std::make_shared<std::string>();
    auto start = std::make_shared<std::string>();
    auto trials = std::make_shared<uint64_t>(10000);
    auto delta = std::make_shared<double>(0.01);
    auto f_text = std::make_shared<std::string>();
    auto p_text = std::make_shared<std::string>();
    auto with_exact = std::make_shared<bool>(false);
    cmd->add_option("--lp", *lp_path, "program JSON")->required();
    cmd->add_option("--basis", *basis_text, "query basis")->required();
    cmd->add_option("--start", *start, "explicit start basis (big-M start when absent)");
    cmd->add_option("--trials", *trials, "trial count")->capture_default_str();
    cmd->add_option("--delta", *delta, "confidence parameter")->capture_default_str();
    cmd->add_option("--f", *f_text, "threshold f of the promise gap");
    cmd->add_option("--p", *p_text, "gap reciprocal parameter p (gap width 1/p)");
    cmd->add_flag("--exact", *with_exact, "also run the exact propagation");
    cmd->callback([&, lp_path, basis_text, start, trials, delta, f_text, p_text, with_exact] {
      action = [&, lp_path, basis_text, start, trials, delta, f_text, p_text, with_exact] {
        LinearProgram lp = load_lp_file(*lp_path);
        Basis query = parse_basis_arg(*basis_text);
        LinearProgram traced = lp;
        Basis start_basis;
        if (start->empty()) {
          BigMProgram big = big_m_transform(lp);
          traced = big.lp;
          start_basis = big.start;
        } else {
          start_basis = parse_basis_arg(*start);
        }
        VisitEstimate est = estimate_visit(traced, start_basis, query, *trials, seed);
        if (*with_exact) est.exact_p = exact_visit_probability(traced, start_basis, query);
        json result{{"p_hat", format_rational(est.p_hat)},
                    {"trials", est.trials},
                    {"radius", est.hoeffding_radius(*delta)}};
        if (est.exact_p) result["exact"] = format_rational(*est.exact_p);
        if (!f_text->empty() && !p_text->empty()) {
          FpVerdict v = decide_fp(est, parse_rational(*f_text), parse_rational(*p_text), *delta);
          result["verdict"] = fp_verdict_name(v);
        }
        print_result(result, format, out);
      };
    });
  }

  // oracle
  {
    auto* cmd = app.add_subcommand("oracle", "exhaustive optimum over basic solutions");
    auto lp_path = std::make_shared<std::string>();
    auto cap = std::make_shared<uint64_t>(1000000);
    auto serial = std::make_shared<bool>(false);
    cmd->add_option("--lp", *lp_path, "program JSON")->required();
    cmd->add_option("--cap", *cap, "basis-count budget")->capture_default_str();
    cmd->add_flag("--serial", *serial, "use the serial reference scan");
    cmd->callback([&, lp_path, cap, serial] {
      action = [&, lp_path, cap, serial] {
        LinearProgram lp = load_lp_file(*lp_path);
        BruteForceResult r =
            *serial ? brute_force_optimum_serial(lp, *cap) : brute_force_optimum(lp, *cap);
        print_result(oracle_result_to_json(r), format, out);
      };
    });
  }

  std::vector<std::string> mutable_args(args.rbegin(), args.rend());
  try {
    app.parse(mutable_args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << json{{"error", "PRECONDITION"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace pivotlab
