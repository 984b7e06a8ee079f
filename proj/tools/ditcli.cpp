// Command-line front end: gen, solve, oracle, check, bench.
// Exit status: 0 success, 2 infeasible, 1 error or check mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "ditree/bench.hpp"
#include "ditree/check.hpp"
#include "ditree/cit.hpp"
#include "ditree/dit.hpp"
#include "ditree/generator.hpp"
#include "ditree/greedy.hpp"
#include "ditree/io.hpp"
#include "ditree/mcdit.hpp"
#include "ditree/oracle.hpp"
#include "ditree/parallel.hpp"
#include "ditree/relax.hpp"

using namespace ditree;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text << '\n';
}

json labels(const TreeInstance& inst, const std::vector<EdgeId>& edges) {
  json out = json::array();
  for (EdgeId e : edges) out.push_back(inst.label(e));
  return out;
}

SolveReport cit_report(const TreeInstance& inst, double lambda) {
  CitSolution sol = solve_cit(inst, inst.params().K, inst.params().N, lambda);
  SolveReport r;
  r.status = Status::kOptimal;
  r.objective = sol.root.h;
  r.min_path = sol.root.sp;
  r.plan = sol.plan;
  r.lambda_star = lambda;
  r.cit_calls = 1;
  r.detail = "srd " + std::to_string(sol.root.srd);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double interdiction on trees: solvers, oracles and experiment tools"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Write a random instance");
  InstanceFamily family;
  int gen_max_N = 0;
  std::string gen_out;
  gen->add_option("--n", family.n, "Number of edges")->check(CLI::PositiveNumber);
  gen->add_option("--seed", family.seed, "RNG seed");
  gen->add_option("--w-lo", family.w.lo);
  gen->add_option("--w-hi", family.w.hi);
  gen->add_option("--u-lo", family.u.lo);
  gen->add_option("--u-hi", family.u.hi);
  gen->add_option("--c-lo", family.c.lo);
  gen->add_option("--c-hi", family.c.hi);
  gen->add_option("--r-lo", family.r.lo);
  gen->add_option("--r-hi", family.r.hi);
  gen->add_option("--max-N", gen_max_N, "Cap on the drawn N (0 = none)");
  gen->add_flag("--real,!--integral", [&](std::int64_t count) { family.integral = count <= 0; },
                "Draw real-valued data instead of integers");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  // solve / oracle
  std::string problem_name = "dit";
  std::string input;
  std::string out;
  double lambda = 0.5;
  bool refine = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--problem", problem_name)->check(CLI::IsMember({"dit", "dit1", "cit", "mcdit", "relax"}));
  solve->add_option("input", input, "Instance JSON")->required();
  solve->add_option("--lambda", lambda, "Scalarization weight for --problem cit")->check(CLI::Range(0.0, 1.0));
  solve->add_flag("--refine", refine, "mcdit: also test real budget breakpoints below K*");
  solve->add_option("-o,--out", out);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive ground truth for an instance file");
  oracle->add_option("--problem", problem_name)->check(CLI::IsMember({"dit", "dit1", "cit", "mcdit", "relax"}));
  oracle->add_option("input", input, "Instance JSON")->required();
  oracle->add_option("--lambda", lambda)->check(CLI::Range(0.0, 1.0));
  oracle->add_option("-o,--out", out);

  // check
  CheckConfig cc;
  cc.workers = default_workers();
  std::string cc_problem = "cit";
  std::string cc_out;
  auto* check = app.add_subcommand("check", "Compare a solver with its oracle on random instances");
  check->add_option("--problem", cc_problem)->check(CLI::IsMember({"dit", "dit1", "cit", "mcdit", "relax"}));
  check->add_option("--count", cc.count)->check(CLI::PositiveNumber);
  check->add_option("--max-n", cc.max_n)->check(CLI::Range(1, kOracleEdgeCap));
  check->add_option("--max-N", cc.max_N)->check(CLI::PositiveNumber);
  check->add_option("--max-r", cc.max_r)->check(CLI::PositiveNumber);
  check->add_option("--seed", cc.seed);
  check->add_option("--workers", cc.workers)->check(CLI::PositiveNumber);
  check->add_flag("--mutate", cc.mutate, "Corrupt the solver input to exercise the harness");
  check->add_option("--out", cc_out, "Directory for minimized counterexamples");

  // bench
  BenchConfig bc;
  bc.workers = default_workers();
  std::vector<std::string> algorithms;
  std::string format = "tsv";
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Time the solvers over growing trees");
  bench->add_option("--sizes", bc.sizes)->check(CLI::PositiveNumber);
  bench->add_option("--algorithms", algorithms)->check(CLI::IsMember({"n1", "cit", "dit", "mcdit"}));
  bench->add_option("--reps", bc.reps)->check(CLI::PositiveNumber);
  bench->add_option("--seed", bc.seed);
  bench->add_option("--lambda", bc.cit_lambda)->check(CLI::Range(0.0, 1.0));
  bench->add_option("--max-N", bc.family.max_N);
  bench->add_option("--workers", bc.workers)->check(CLI::PositiveNumber);
  bench->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  bench->add_option("-o,--out", bench_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) {
      if (gen_max_N > 0) family.max_N = gen_max_N;
      TreeInstance inst = gen_instance(family);
      emit(instance_to_json(inst).dump(2), gen_out);
      std::cerr << "generated n=" << family.n << " seed=" << family.seed << '\n';
      return kExitOk;
    }

    if (*solve) {
      TreeInstance inst = read_instance(input);
      const Problem problem = parse_problem(problem_name);
      SolveReport report;
      switch (problem) {
        case Problem::kRelax: report = solve_dit_inf(inst); break;
        case Problem::kDit1: report = solve_dit_n1(inst); break;
        case Problem::kCit: report = cit_report(inst, lambda); break;
        case Problem::kDit: report = solve_dit(inst); break;
        case Problem::kMcdit: report = solve_mcdit(inst, McditOptions{DitOptions{}, refine}); break;
      }
      emit(report_to_json(inst, report, problem_name).dump(2), out);
      return report.feasible() ? kExitOk : kExitInfeasible;
    }

    if (*oracle) {
      TreeInstance inst = read_instance(input);
      const Params& p = inst.params();
      const Problem problem = parse_problem(problem_name);
      OracleResult r;
      switch (problem) {
        case Problem::kRelax: {
          Params open = p;
          open.N = 0;
          for (EdgeId e = 1; e <= inst.edge_count(); ++e) open.N += inst.r(e);
          r = oracle_dit(inst.with_params(open));
          break;
        }
        case Problem::kDit1: r = oracle_dit_single(inst); break;
        case Problem::kCit: r = oracle_cit(inst, p.K, p.N, lambda); break;
        case Problem::kDit: r = oracle_dit(inst); break;
        case Problem::kMcdit: r = oracle_mcdit(inst); break;
      }
      json doc;
      doc["problem"] = problem_name;
      doc["status"] = r.best_value ? "optimal" : "infeasible";
      doc["best_value"] = r.best_value ? json(*r.best_value) : json(nullptr);
      doc["best_sets"] = json::array();
      for (const auto& set : r.best_sets) doc["best_sets"].push_back(labels(inst, set));
      doc["enumerated"] = r.enumerated;
      if (problem == Problem::kCit) doc["lambda"] = lambda;
      emit(doc.dump(2), out);
      return r.best_value ? kExitOk : kExitInfeasible;
    }

    if (*check) {
      cc.problem = parse_problem(cc_problem);
      if (!cc_out.empty()) cc.counterexample_dir = cc_out;
      CheckSummary summary = run_check(cc);
      for (const Mismatch& m : summary.mismatches) {
        std::cout << "MISMATCH id=" << m.id << " seed=" << m.seed << ": " << m.message << " (minimized to "
                  << m.minimized.edge_count() << " edges";
        if (m.file) std::cout << ", " << m.file->string();
        std::cout << ")\n";
      }
      std::cout << (summary.mismatches.empty() ? "PASS" : "FAIL") << " problem=" << cc_problem
                << " checked=" << summary.checked << " mismatches=" << summary.mismatches.size()
                << " seed=" << cc.seed << '\n';
      return summary.mismatches.empty() ? kExitOk : kExitError;
    }

    if (*bench) {
      if (!algorithms.empty()) {
        bc.algorithms.clear();
        for (const auto& a : algorithms) bc.algorithms.push_back(parse_algorithm(a));
      }
      BenchReport report = run_bench(bc);
      emit(format == "json" ? bench_json(report).dump(2) : bench_tsv(report), bench_out);
      std::cerr << "bench seed=" << report.seed << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
