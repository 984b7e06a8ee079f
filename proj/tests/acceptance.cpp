// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
//
//   acceptance [--out DIR] [--diagnostic] [--cli PATH]
//
// --out        where minimized bisection counterexamples are written
// --diagnostic record bisection-vs-oracle gaps without failing criterion 3
// --cli        ditcli binary used for the exit-code checks of criterion 8

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <sstream>
#include <sys/wait.h>

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
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool same(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); }

struct Outcome {
  bool pass;
  std::string summary;
  std::vector<std::string> notes;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << o.summary << std::endl;
  for (const auto& note : o.notes) std::cout << "         " << note << std::endl;
  if (!o.pass) ++failures;
}

std::string fmt(double x, int precision = 3) {
  std::ostringstream out;
  out.precision(precision);
  out << x;
  return out.str();
}

// Iteration bounds, checked wherever the solvers run (criterion 6).
struct BoundLog {
  std::mutex mutex;
  int dit_runs = 0;
  int mcdit_runs = 0;
  std::vector<std::string> violations;

  void dit(const TreeInstance& inst, const SolveReport& r, const std::string& where) {
    const double U = bisection_scale(inst);
    const double bound = 2.0 * std::log2(std::max(U, 1.0)) + 2.0;
    std::lock_guard lock(mutex);
    ++dit_runs;
    if (r.cit_calls > bound) {
      violations.push_back(where + ": " + std::to_string(r.cit_calls) + " cit solves > " + fmt(bound));
    }
  }
  void mcdit(const TreeInstance& inst, const SolveReport& r, const std::string& where) {
    const double K2 = max_useful_budget(inst);
    const double bound = std::log2(std::max(K2, 1.0)) + 2.0;
    std::lock_guard lock(mutex);
    ++mcdit_runs;
    if (r.dit_calls > bound) {
      violations.push_back(where + ": " + std::to_string(r.dit_calls) + " dit solves > " + fmt(bound));
    }
  }
};

BoundLog bounds;
const int workers = default_workers();
constexpr std::uint64_t kSeed = 20240601;

// 1. Scalarized DP against exhaustive enumeration.
Outcome cit_oracle() {
  auto start = Clock::now();
  CheckConfig cc;
  cc.problem = Problem::kCit;
  cc.count = 200;
  cc.max_n = 12;
  cc.max_N = 4;
  cc.max_r = 3;
  cc.seed = kSeed;
  cc.workers = workers;
  CheckSummary s = run_check(cc);
  const double t = seconds_since(start);
  Outcome o{s.mismatches.empty() && t < 60.0,
            "200 instances x 5 lambdas, " + std::to_string(s.mismatches.size()) + " mismatches, " + fmt(t) + " s"};
  for (const auto& m : s.mismatches) o.notes.push_back("seed " + std::to_string(m.seed) + ": " + m.message);
  return o;
}

// 2. Single-upgrade greedy against the single-edge oracle.
Outcome greedy_oracle() {
  auto start = Clock::now();
  CheckConfig cc;
  cc.problem = Problem::kDit1;
  cc.count = 1000;
  cc.max_n = 12;
  cc.seed = kSeed;
  cc.workers = workers;
  CheckSummary s = run_check(cc);
  const double t = seconds_since(start);
  Outcome o{s.mismatches.empty() && t < 30.0,
            "1000 instances, " + std::to_string(s.mismatches.size()) + " mismatches, " + fmt(t) + " s"};
  for (const auto& m : s.mismatches) o.notes.push_back("seed " + std::to_string(m.seed) + ": " + m.message);
  return o;
}

// 3. Bisection against the exact optimum.
Outcome dit_oracle(const std::optional<fs::path>& out, bool diagnostic) {
  auto start = Clock::now();
  CheckConfig cc;
  cc.problem = Problem::kDit;
  cc.count = 200;
  cc.max_n = 12;
  cc.max_N = 4;
  cc.max_r = 3;
  cc.seed = kSeed;

  std::mutex mutex;
  std::vector<std::string> a_fail, b_fail;
  std::vector<std::pair<int, std::string>> c_fail;
  int feasible = 0, fallbacks = 0;
  parallel_for(cc.count, workers, [&](int id) {
    TreeInstance inst = check_instance(cc, id);
    SolveReport r = solve_dit(inst);
    bounds.dit(inst, r, "dit instance " + std::to_string(id));
    OracleResult o = oracle_dit(inst);
    std::lock_guard lock(mutex);
    const std::string tag = "seed " + std::to_string(instance_seed(cc.seed, id));
    fallbacks += r.fallback_used;
    if (r.feasible() != o.best_value.has_value()) {
      a_fail.push_back(tag + ": verdict " + to_string(r.status));
      return;
    }
    if (!r.feasible()) return;
    ++feasible;
    if (!at_least(r.min_path, inst.params().M)) a_fail.push_back(tag + ": plan misses M");
    if (r.objective > *o.best_value + 1e-9) b_fail.push_back(tag + ": " + fmt(r.objective, 12) + " > oracle");
    if (!same(r.objective, *o.best_value)) {
      c_fail.emplace_back(id, tag + ": bisection " + fmt(r.objective, 12) + " < oracle " + fmt(*o.best_value, 12));
    }
  });
  std::sort(c_fail.begin(), c_fail.end());

  Outcome o;
  o.pass = a_fail.empty() && b_fail.empty() && (diagnostic || c_fail.empty());
  o.summary = "200 instances (" + std::to_string(feasible) + " feasible): (a) " + std::to_string(a_fail.size()) +
              " verdict errors, (b) " + std::to_string(b_fail.size()) + " above oracle, (c) " +
              std::to_string(c_fail.size()) + " below oracle" + (diagnostic ? " [diagnostic]" : "") + ", " +
              std::to_string(fallbacks) + " fallbacks, " + fmt(seconds_since(start)) + " s";
  for (const auto& s : a_fail) o.notes.push_back("(a) " + s);
  for (const auto& s : b_fail) o.notes.push_back("(b) " + s);
  for (const auto& [id, msg] : c_fail) {
    std::string note = "(c) " + msg;
    TreeInstance small = minimize_instance(check_instance(cc, id), [](const TreeInstance& t) {
      if (t.params().N < 1) return false;
      SolveReport r = solve_dit(t);
      OracleResult o = oracle_dit(t);
      return r.feasible() && o.best_value && !same(r.objective, *o.best_value);
    });
    note += "; minimized to " + std::to_string(small.edge_count()) + " edges";
    if (out) {
      fs::create_directories(*out);
      fs::path file = *out / ("dit-bisection-" + std::to_string(instance_seed(cc.seed, id)) + ".json");
      write_instance(small, file);
      note += " -> " + file.string();
    }
    o.notes.push_back(note);
  }

  // Reference point outside the sample: a known instance whose optimum is
  // not supported by any lambda. Reported, not scored.
  RawInstance raw;
  raw.root = "0";
  raw.edges = {{"0", "1", 0, 2, 1, 2}, {"0", "2", 10, 17, 1, 1}, {"2", "3", 0, 12, 1, 1}, {"1", "9", 5, 17, 1, 3}};
  raw.params = {6, 24, 3, 107};
  TreeInstance known = build_instance(raw);
  o.notes.push_back("note: 4-edge non-supported optimum (outside the sample): bisection " +
                    fmt(solve_dit(known).objective) + ", oracle " + fmt(*oracle_dit(known).best_value));
  return o;
}

// 4. sp non-decreasing and srd non-increasing along the lambda grid.
Outcome monotonicity() {
  CheckConfig cc;
  cc.problem = Problem::kCit;
  cc.count = 100;
  cc.max_n = 40;
  cc.max_N = 6;
  cc.max_r = 3;
  cc.seed = kSeed + 4;
  std::mutex mutex;
  std::vector<std::string> violations;
  parallel_for(cc.count, workers, [&](int id) {
    TreeInstance inst = check_instance(cc, id);
    CitSolver solver(inst, inst.params().K, inst.params().N);
    DPState prev;
    for (int i = 0; i <= 10; ++i) {
      DPState cur = solver.solve(i / 10.0).root;
      if (i > 0 && (cur.sp < prev.sp - 1e-9 || cur.srd > prev.srd + 1e-9)) {
        std::lock_guard lock(mutex);
        violations.push_back("seed " + std::to_string(instance_seed(cc.seed, id)) + " at lambda " + fmt(i / 10.0));
      }
      prev = cur;
    }
  });
  Outcome o{violations.empty(), "100 instances x 11 lambdas, " + std::to_string(violations.size()) + " violations"};
  o.notes = violations;
  return o;
}

// 5. Minimum budget against a linear scan, plus the K* - 1 falsification.
Outcome mcdit_minimality() {
  auto start = Clock::now();
  CheckConfig cc;
  cc.problem = Problem::kMcdit;
  cc.count = 100;
  cc.max_n = 12;
  cc.max_N = 4;
  cc.max_r = 3;
  cc.seed = kSeed + 5;
  std::mutex mutex;
  std::vector<std::string> errors;
  int feasible = 0;
  parallel_for(cc.count, workers, [&](int id) {
    TreeInstance inst = check_instance(cc, id);
    SolveReport r = solve_mcdit(inst);
    bounds.mcdit(inst, r, "mcdit instance " + std::to_string(id));
    OracleResult o = oracle_mcdit(inst);
    const std::string tag = "seed " + std::to_string(instance_seed(cc.seed, id));
    std::string error;
    if (r.feasible() != o.best_value.has_value()) {
      error = tag + ": verdict " + to_string(r.status);
    } else if (r.feasible()) {
      const double k = *r.k_star;
      if (!same(k, *o.best_value)) error = tag + ": K* " + fmt(k) + " vs oracle " + fmt(*o.best_value);
      if (error.empty() && k >= 1) {
        Params p = inst.params();
        p.K = k - 1;
        SolveReport below = solve_dit(inst.with_params(p));
        bounds.dit(inst.with_params(p), below, tag + " at K*-1");
        if (below.feasible() && at_least(below.objective, p.D)) error = tag + ": K*-1 already suffices";
      }
    }
    std::lock_guard lock(mutex);
    feasible += r.feasible();
    if (!error.empty()) errors.push_back(error);
  });
  const double t = seconds_since(start);
  Outcome o{errors.empty() && t < 60.0, "100 instances (" + std::to_string(feasible) + " feasible), " +
                                            std::to_string(errors.size()) + " errors, " + fmt(t) + " s"};
  o.notes = errors;
  return o;
}

// 6. Solve counts, gathered from criteria 3, 5 and 7.
Outcome iteration_bounds() {
  Outcome o{bounds.violations.empty(), std::to_string(bounds.dit_runs) + " dit runs, " +
                                           std::to_string(bounds.mcdit_runs) + " mcdit runs, " +
                                           std::to_string(bounds.violations.size()) + " over the bound"};
  o.notes = bounds.violations;
  return o;
}

// 7. Growth of the DP time with n at fixed N, and the n = 500 bisection time.
Outcome scaling() {
  const std::vector<int> sizes{10, 50, 100, 300, 500};
  constexpr int kInstances = 5;
  constexpr int kN = 4;
  std::vector<double> mean(sizes.size());
  double dit_max = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    double total = 0.0;
    for (int j = 0; j < kInstances; ++j) {
      InstanceFamily f;
      f.n = sizes[i];
      f.seed = kSeed + 7 * 1000 + static_cast<std::uint64_t>(i * kInstances + j);
      f.fixed_N = kN;
      TreeInstance inst = gen_instance(f);
      CitSolver solver(inst, inst.params().K, kN);
      // Repeat small solves until at least 20 ms elapse, then take the mean.
      int reps = 0;
      auto start = Clock::now();
      do {
        solver.solve(0.5);
        ++reps;
      } while (seconds_since(start) < 0.02);
      total += seconds_since(start) / reps;
      if (sizes[i] == 500) {
        SolveReport r = solve_dit(inst);
        bounds.dit(inst, r, "scaling n=500 #" + std::to_string(j));
        dit_max = std::max(dit_max, r.wall_seconds);
      }
    }
    mean[i] = total / kInstances;
  }

  Outcome o;
  o.pass = dit_max < 30.0;
  std::string ratios;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    // Allowed growth for an n ratio q: 3^(log_5 q).
    const double q = static_cast<double>(sizes[i + 1]) / sizes[i];
    const double allowed = std::pow(3.0, std::log(q) / std::log(5.0));
    const double ratio = mean[i + 1] / mean[i];
    if (ratio > allowed) o.pass = false;
    o.notes.push_back("n " + std::to_string(sizes[i]) + " -> " + std::to_string(sizes[i + 1]) + ": time x" +
                      fmt(ratio) + ", allowed x" + fmt(allowed) + (ratio > allowed ? "  (exceeded)" : ""));
  }
  std::string times;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    times += (i ? ", " : "") + std::to_string(sizes[i]) + ": " + fmt(mean[i] * 1e3) + " ms";
  }
  o.summary = "mean cit time at N=" + std::to_string(kN) + " {" + times + "}; dit at n=500 max " + fmt(dit_max) + " s";
  return o;
}

// 8. Constructed infeasible instances, through the library and the CLI.
Outcome infeasibility(const std::string& cli) {
  struct Case {
    std::string name;
    std::string problem;
    TreeInstance inst;
    std::string detail;  // expected prefix of SolveReport::detail
  };
  auto three_edge = [](Params p, int r_ab) {
    RawInstance raw;
    raw.root = "s";
    raw.edges = {{"s", "a", 2, 6, 1, 1}, {"a", "b", 3, 4, 2, static_cast<double>(r_ab)}, {"s", "t", 1, 10, 1, 1}};
    raw.params = p;
    return build_instance(raw);
  };
  RawInstance star;
  star.root = "s";
  star.edges = {{"s", "x", 1, 10, 1, 1}, {"s", "y", 1, 10, 1, 1}};
  star.params = {5, 9, 1, 0};

  std::vector<Case> cases{
      {"relaxation, M above the capped shortest path", "relax", three_edge({11, 4, 2, 0}, 2), "capped weights leave"},
      {"greedy, no slack on the shortest path", "dit1", three_edge({6, 4, 1, 0}, 1),
       "no edge on the shortest path"},
      {"greedy, no shared edge above the short leaves", "dit1", build_instance(star),
       "no single edge lifts"},
      {"bisection, lambda = 1 shortest path below M", "dit", three_edge({6, 4, 2, 0}, 2),
       "max shortest path under the budget"},
      {"minimum budget, D above the full-budget SRD", "mcdit", three_edge({4, 0, 2, 21}, 2),
       "D unreachable"},
  };

  Outcome o{true, ""};
  const fs::path dir = fs::temp_directory_path() / "ditree_acceptance";
  fs::create_directories(dir);
  int passed = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    SolveReport r;
    if (c.problem == "relax") r = solve_dit_inf(c.inst);
    if (c.problem == "dit1") r = solve_dit_n1(c.inst);
    if (c.problem == "dit") r = solve_dit(c.inst);
    if (c.problem == "mcdit") r = solve_mcdit(c.inst);
    bool ok = !r.feasible() && r.detail.rfind(c.detail, 0) == 0;
    std::string note = c.name + ": status " + to_string(r.status) + " (" + r.detail + ")";
    if (!cli.empty()) {
      fs::path file = dir / ("case" + std::to_string(i) + ".json");
      write_instance(c.inst, file);
      std::string cmd = "\"" + cli + "\" solve --problem " + c.problem + " \"" + file.string() + "\" > /dev/null";
      int status = std::system(cmd.c_str());
      int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      ok = ok && code == 2;
      note += ", cli exit " + std::to_string(code);
    }
    passed += ok;
    if (!ok) o.pass = false;
    o.notes.push_back(note + (ok ? "" : "  (unexpected)"));
  }
  fs::remove_all(dir);
  o.summary = std::to_string(passed) + "/" + std::to_string(cases.size()) + " detectors report infeasible" +
              (cli.empty() ? " (cli not checked)" : " with exit code 2");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  std::string out;
  std::string cli;
  bool diagnostic = false;
  app.add_option("--out", out, "Directory for minimized counterexamples");
  app.add_option("--cli", cli, "ditcli binary for exit-code checks");
  app.add_flag("--diagnostic", diagnostic, "Do not fail criterion 3 on bisection-vs-oracle gaps");
  CLI11_PARSE(app, argc, argv);
  std::optional<fs::path> out_dir;
  if (!out.empty()) out_dir = out;

  std::cout << "seed " << kSeed << ", workers " << workers << std::endl;
  report(1, "CIT oracle equivalence", cit_oracle());
  report(2, "Greedy equivalence", greedy_oracle());
  report(3, "DIT bisection vs oracle", dit_oracle(out_dir, diagnostic));
  report(4, "Monotonicity in lambda", monotonicity());
  report(5, "MCDIT minimality", mcdit_minimality());
  auto scale = scaling();  // runs before 6 so its dit solves are counted
  report(6, "Iteration bounds", iteration_bounds());
  report(7, "Scaling trend", scale);
  report(8, "Infeasibility detectors", infeasibility(cli));
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
