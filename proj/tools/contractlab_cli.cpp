// contractlab: solvers, generators, and verification suites for combinatorial
// contract design with supermodular rewards.
//
// Exit codes: 0 success, 1 usage/input error, 2 solver or verification
// failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "contractlab/io.hpp"
#include "contractlab/selfcheck.hpp"

namespace {

using namespace contractlab;

struct CommonFlags {
  std::string instance;
  std::string out;
  std::string format = "json";
};

void emit(const CommonFlags& flags, const std::string& json_text, const std::string& csv_text) {
  const std::string& chosen = flags.format == "csv" ? csv_text : json_text;
  std::fputs(chosen.c_str(), stdout);
  if (!flags.out.empty()) write_text_file(flags.out, chosen);
}

SingleAgentInstance load_single(const std::string& path) {
  Instance inst = load_instance(path);
  if (!std::holds_alternative<SingleAgentInstance>(inst))
    throw ParameterError(path + " is not a single-agent instance");
  return std::get<SingleAgentInstance>(std::move(inst));
}

GraphInstance load_multi(const std::string& path, const std::optional<Rational>& cost_override) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".txt") {
    if (!cost_override)
      throw ParameterError("edge-list graphs need --cost (reparameterized, in [0,1))");
    return GraphInstance(load_edge_list(path), *cost_override);
  }
  Instance inst = load_instance(path);
  if (!std::holds_alternative<GraphInstance>(inst))
    throw ParameterError(path + " is not a multi-agent graph instance");
  return std::get<GraphInstance>(std::move(inst));
}

int run_single_solve(const CommonFlags& flags) {
  const SingleAgentInstance inst = load_single(flags.instance);
  OracleStats stats;
  // graph rewards get the polynomial min-cut oracle; everything else the
  // enumeration oracle
  AgentOracle oracle =
      inst.valuation.kind() == ValuationKind::graph_supermodular
          ? make_mincut_agent_oracle(inst.valuation.graph(), inst.costs, stats)
          : make_bruteforce_agent_oracle(inst.valuation, inst.costs, stats);
  const BreakpointCurve curve = breakpoints(inst.valuation, inst.costs, oracle);
  const ContractChoice best = optimal_contract(curve, inst.valuation);
  emit(flags, single_agent_report_json(curve, best, inst.valuation, stats),
       curve_to_csv(curve, inst.valuation));
  return 0;
}

int run_single_verify(const CommonFlags& flags, int max_n) {
  const SingleAgentInstance inst = load_single(flags.instance);
  if (inst.valuation.n() > max_n)
    throw ParameterError("instance exceeds --max-n = " + std::to_string(max_n));
  OracleStats stats;
  AgentOracle oracle = make_bruteforce_agent_oracle(inst.valuation, inst.costs, stats);
  const BreakpointCurve fast = breakpoints(inst.valuation, inst.costs, oracle);
  const BreakpointCurve truth = bruteforce_breakpoints(inst.valuation, inst.costs);

  bool equal = fast.points.size() == truth.points.size();
  for (std::size_t i = 0; equal && i < fast.points.size(); ++i)
    equal = fast.points[i].t == truth.points[i].t && fast.points[i].set == truth.points[i].set;
  const bool query_ok =
      stats.demand_calls <= 2 * static_cast<long long>(fast.points.size()) + 1;

  std::printf("breakpoints: %zu, oracle curve match: %s, query bound: %s\n", fast.points.size(),
              equal ? "yes" : "NO", query_ok ? "yes" : "NO");
  return (equal && query_ok) ? 0 : 2;
}

int run_multi_brute(const CommonFlags& flags, int max_n,
                    const std::optional<Rational>& cost_override) {
  const GraphInstance inst = load_multi(flags.instance, cost_override);
  if (inst.n() > max_n)
    throw ParameterError("instance exceeds --max-n = " + std::to_string(max_n) +
                         " for exhaustive search");
  const auto [set, mu] = bruteforce_optimum(inst);
  const std::string report = multi_brute_report_json(inst, set, mu_p(inst, set));
  std::fputs(report.c_str(), stdout);
  if (!flags.out.empty()) write_text_file(flags.out, report);
  return 0;
}

int run_multi_ptas(const CommonFlags& flags, const PtasConfig& cfg, const std::string& csv_path,
                   const std::optional<Rational>& cost_override) {
  const GraphInstance inst = load_multi(flags.instance, cost_override);
  const PtasResult result = ptas_solve(inst, cfg);
  emit(flags, ptas_report_json(result.report), ptas_candidates_csv(result.report));
  if (!csv_path.empty()) write_text_file(csv_path, ptas_candidates_csv(result.report));
  return 0;
}

int run_verify_properties(bool include_criteria) {
  std::vector<selfcheck::CheckResult> results = selfcheck::run_module_invariants();
  if (include_criteria) {
    const std::vector<selfcheck::CheckResult> crit = selfcheck::run_all_criteria();
    results.insert(results.end(), crit.begin(), crit.end());
  }
  bool all_ok = true;
  for (const auto& r : results) {
    std::printf("[%s] %s (%s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.details.c_str());
    all_ok = all_ok && r.pass;
  }
  std::printf("%s\n", all_ok ? "all checks passed" : "FAILURES present");
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial contract design solvers (supermodular rewards)"};
  app.require_subcommand(1);

  CommonFlags flags;
  int max_n = 22;
  std::string cost_text;
  int exit_code = 0;

  // --- single ---------------------------------------------------------
  CLI::App* single = app.add_subcommand("single", "single-agent linear contracts");
  single->require_subcommand(1);

  CLI::App* ssolve = single->add_subcommand("solve", "enumerate breakpoints, pick the optimum");
  ssolve->add_option("--instance", flags.instance, "instance JSON")->required();
  ssolve->add_option("--out", flags.out, "also write the report here");
  ssolve->add_option("--format", flags.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  ssolve->callback([&] { exit_code = run_single_solve(flags); });

  CLI::App* sverify = single->add_subcommand("verify", "cross-check against the exhaustive oracle");
  sverify->add_option("--instance", flags.instance, "instance JSON")->required();
  sverify->add_option("--max-n", max_n, "refuse larger instances")->capture_default_str();
  sverify->callback([&] { exit_code = run_single_verify(flags, std::min(max_n, 12)); });

  // --- multi ----------------------------------------------------------
  CLI::App* multi = app.add_subcommand("multi", "uniform-cost graph contracts (U-GSC)");
  multi->require_subcommand(1);

  CLI::App* mbrute = multi->add_subcommand("brute", "exact optimum by subset scan");
  mbrute->add_option("--instance", flags.instance, "instance JSON or .txt edge list")->required();
  mbrute->add_option("--out", flags.out, "also write the report here");
  mbrute->add_option("--max-n", max_n, "refuse larger instances")->capture_default_str();
  mbrute->add_option("--cost", cost_text, "reparameterized cost for .txt edge lists");
  mbrute->callback([&] {
    std::optional<Rational> cost;
    if (!cost_text.empty()) cost = parse_rational(cost_text);
    exit_code = run_multi_brute(flags, max_n, cost);
  });

  PtasConfig cfg;
  std::string candidates_csv;
  CLI::App* mptas = multi->add_subcommand("ptas", "additive approximation scheme");
  mptas->add_option("--instance", flags.instance, "instance JSON or .txt edge list")->required();
  mptas->add_option("--out", flags.out, "also write the report here");
  mptas->add_option("--format", flags.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  mptas->add_option("--epsilon", cfg.epsilon, "additive error knob in (0,1); theory wants <= 1/7")
      ->capture_default_str();
  mptas->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  mptas->add_option("--reps", cfg.reps, "sampling repetitions")->capture_default_str();
  mptas->add_option("--m", cfg.m, "multiset size (0 = default)")->capture_default_str();
  mptas->add_option("--rounding-draws", cfg.rounding_draws, "rounded sets per LP")
      ->capture_default_str();
  mptas->add_option("--guess-grid-ratio", cfg.guess_grid_ratio,
                    "geometric grid ratio for guesses (0 = 1+epsilon)");
  mptas->add_option("--candidates-csv", candidates_csv, "write the candidate table here");
  mptas->add_option("--cost", cost_text, "reparameterized cost for .txt edge lists");
  mptas->callback([&] {
    std::optional<Rational> cost;
    if (!cost_text.empty()) cost = parse_rational(cost_text);
    exit_code = run_multi_ptas(flags, cfg, candidates_csv, cost);
  });

  // --- gen ------------------------------------------------------------
  CLI::App* gen = app.add_subcommand("gen", "write benchmark instances");
  std::string family, base_path, out_path, eps_text = "1/4", gen_cost_text = "1/2";
  int gn = 24, gk = 4, clique_size = 0;
  double gp = 0.5;
  std::uint64_t gseed = 0;
  gen->add_option("--family", family, "kclique|example1|lsac|gnp|planted")->required();
  gen->add_option("--out", out_path, "output instance path")->required();
  gen->add_option("--base", base_path, "base graph (JSON instance or .txt) for kclique/lsac");
  gen->add_option("--n", gn, "node count")->capture_default_str();
  gen->add_option("--k", gk, "clique parameter for kclique")->capture_default_str();
  gen->add_option("--clique-size", clique_size, "planted clique size / promised lsac clique");
  gen->add_option("--p", gp, "edge probability")->capture_default_str();
  gen->add_option("--eps", eps_text, "lsac epsilon as p/q")->capture_default_str();
  gen->add_option("--cost", gen_cost_text, "uniform cost as p/q (gnp, planted)")
      ->capture_default_str();
  gen->add_option("--seed", gseed, "RNG seed")->capture_default_str();
  gen->callback([&] {
    const auto load_base = [&]() -> Graph {
      if (base_path.empty()) throw ParameterError("--base is required for this family");
      if (base_path.size() > 4 && base_path.substr(base_path.size() - 4) == ".txt")
        return load_edge_list(base_path);
      Instance inst = load_instance(base_path);
      if (std::holds_alternative<GraphInstance>(inst))
        return std::get<GraphInstance>(inst).graph;
      throw ParameterError("--base must be a graph instance");
    };
    GeneratedInstance out;
    if (family == "kclique") out = gen_kclique_reduction(load_base(), gk);
    else if (family == "example1") out = gen_example1(gn);
    else if (family == "lsac") out = gen_lsac(load_base(), parse_rational(eps_text), clique_size);
    else if (family == "gnp") out = gen_gnp(gn, gp, gseed, parse_rational(gen_cost_text));
    else if (family == "planted")
      out = gen_planted(gn, clique_size, gp, gseed, parse_rational(gen_cost_text));
    else throw ParameterError("unknown family '" + family + "'");
    save_instance(out, out_path);
    std::printf("wrote %s (%s, n=%d)\n", out_path.c_str(), out.provenance.c_str(),
                out.instance.n());
  });

  // --- verify-properties ----------------------------------------------
  bool with_criteria = false;
  CLI::App* verify = app.add_subcommand("verify-properties",
                                        "run the module invariant suites and print a table");
  verify->add_flag("--criteria", with_criteria, "also run the numbered acceptance checks");
  verify->callback([&] { exit_code = run_verify_properties(with_criteria); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const SolverError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return 2;
  } catch (const InternalError& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 2;
  }
  return exit_code;
}
