#include "ditree/check.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ditree/cit.hpp"
#include "ditree/dit.hpp"
#include "ditree/generator.hpp"
#include "ditree/greedy.hpp"
#include "ditree/io.hpp"
#include "ditree/mcdit.hpp"
#include "ditree/oracle.hpp"
#include "ditree/parallel.hpp"
#include "ditree/relax.hpp"

namespace ditree {
namespace {

bool same(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); }

std::string describe(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

// Verdict and objective agreement between a solver report and an oracle.
std::optional<std::string> compare_verdicts(const char* what, bool solver_ok, double solver_value,
                                            const OracleResult& oracle) {
  if (solver_ok != oracle.best_value.has_value()) {
    return std::string(what) + ": solver says " + (solver_ok ? "feasible" : "infeasible") + ", oracle says " +
           (oracle.best_value ? "feasible" : "infeasible");
  }
  if (solver_ok && !same(solver_value, *oracle.best_value)) {
    return std::string(what) + ": solver " + describe(solver_value) + " vs oracle " + describe(*oracle.best_value);
  }
  return std::nullopt;
}

TreeInstance corrupted(Problem problem, const TreeInstance& inst) {
  Params p = inst.params();
  if ((problem == Problem::kCit || problem == Problem::kDit || problem == Problem::kMcdit) && p.N >= 2) {
    p.N -= 1;
  } else {
    p.K *= 0.5;
  }
  return inst.with_params(p);
}

}  // namespace

const char* to_string(Problem p) {
  switch (p) {
    case Problem::kRelax: return "relax";
    case Problem::kDit1: return "dit1";
    case Problem::kCit: return "cit";
    case Problem::kDit: return "dit";
    case Problem::kMcdit: return "mcdit";
  }
  return "?";
}

Problem parse_problem(const std::string& name) {
  for (Problem p : {Problem::kRelax, Problem::kDit1, Problem::kCit, Problem::kDit, Problem::kMcdit}) {
    if (name == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown problem: " + name);
}

std::optional<std::string> compare_with_oracle(Problem problem, const TreeInstance& inst, bool mutate) {
  const TreeInstance solver_input = mutate ? corrupted(problem, inst) : inst;
  const Params& p = inst.params();
  switch (problem) {
    case Problem::kRelax: {
      Params open = p;
      open.N = 0;
      for (EdgeId e = 1; e <= inst.edge_count(); ++e) open.N += inst.r(e);
      SolveReport r = solve_dit_inf(solver_input);
      return compare_verdicts("relax", r.feasible(), r.objective, oracle_dit(inst.with_params(open)));
    }
    case Problem::kDit1: {
      SolveReport r = solve_dit_n1(solver_input);
      return compare_verdicts("dit1", r.feasible(), r.objective, oracle_dit_single(inst));
    }
    case Problem::kCit: {
      for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const Params& sp = solver_input.params();
        CitSolution s = solve_cit(solver_input, sp.K, sp.N, lambda);
        OracleResult o = oracle_cit(inst, p.K, p.N, lambda);
        if (!same(s.root.h, *o.best_value)) {
          return "cit at lambda " + describe(lambda) + ": solver h " + describe(s.root.h) + " vs oracle " +
                 describe(*o.best_value);
        }
      }
      return std::nullopt;
    }
    case Problem::kDit: {
      SolveReport r = solve_dit(solver_input);
      return compare_verdicts("dit", r.feasible(), r.objective, oracle_dit(inst));
    }
    case Problem::kMcdit: {
      SolveReport r = solve_mcdit(solver_input);
      return compare_verdicts("mcdit K*", r.feasible(), r.k_star.value_or(-1.0), oracle_mcdit(inst));
    }
  }
  return std::nullopt;
}

TreeInstance minimize_instance(const TreeInstance& inst, const std::function<bool(const TreeInstance&)>& fails) {
  TreeInstance best = inst;
  auto attempt = [&](const RawInstance& raw) {
    try {
      TreeInstance candidate = build_instance(raw);
      if (fails(candidate)) {
        best = std::move(candidate);
        return true;
      }
    } catch (const std::exception&) {
      // Invalid simplification or a solver precondition; skip it.
    }
    return false;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    RawInstance raw = to_raw(best);
    // Drop a leaf edge.
    for (std::size_t i = 0; i < raw.edges.size() && raw.edges.size() > 1; ++i) {
      const std::string& child = raw.edges[i].child;
      bool leaf = true;
      for (const RawEdge& e : raw.edges) leaf = leaf && e.parent != child;
      if (!leaf) continue;
      RawInstance smaller = raw;
      smaller.edges.erase(smaller.edges.begin() + static_cast<std::ptrdiff_t>(i));
      if (attempt(smaller)) {
        progress = true;
        break;
      }
    }
    if (progress) continue;
    // Simplify edge data one field at a time.
    for (std::size_t i = 0; i < raw.edges.size() && !progress; ++i) {
      for (int change = 0; change < 4 && !progress; ++change) {
        RawInstance simpler = raw;
        RawEdge& e = simpler.edges[i];
        if (change == 0 && e.r != 1.0) e.r = 1.0;
        else if (change == 1 && e.c != 1.0) e.c = 1.0;
        else if (change == 2 && e.u != e.w) e.u = e.w;
        else if (change == 3 && e.w != 0.0) e.w = 0.0;
        else continue;
        progress = attempt(simpler);
      }
    }
    if (!progress && raw.params.N > 1) {
      RawInstance fewer = raw;
      fewer.params.N -= 1;
      progress = attempt(fewer);
    }
  }
  return best;
}

std::uint64_t instance_seed(std::uint64_t seed, int id) { return seed * 1000003ULL + static_cast<std::uint64_t>(id); }

TreeInstance check_instance(const CheckConfig& config, int id) {
  const std::uint64_t seed = instance_seed(config.seed, id);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  InstanceFamily family;
  family.n = std::uniform_int_distribution<int>(1, std::max(1, config.max_n))(rng);
  family.seed = seed;
  family.integral = true;
  family.w = {0, 10};
  family.u = {0, 20};
  family.c = {1, 4};
  family.r = {1, static_cast<double>(config.problem == Problem::kDit1 ? 1 : config.max_r)};
  family.max_N = config.max_N;
  if (config.problem == Problem::kDit1) family.fixed_N = 1;
  return gen_instance(family);
}

CheckSummary run_check(const CheckConfig& config) {
  std::vector<std::optional<Mismatch>> found(config.count);
  parallel_for(config.count, config.workers, [&](int id) {
    TreeInstance inst = check_instance(config, id);
    auto message = compare_with_oracle(config.problem, inst, config.mutate);
    if (!message) return;
    TreeInstance small = minimize_instance(inst, [&](const TreeInstance& candidate) {
      return compare_with_oracle(config.problem, candidate, config.mutate).has_value();
    });
    Mismatch m{id, instance_seed(config.seed, id), *message, small, std::nullopt};
    if (config.counterexample_dir) {
      std::filesystem::create_directories(*config.counterexample_dir);
      auto path = *config.counterexample_dir / (std::string(to_string(config.problem)) + "-" + std::to_string(id) + ".json");
      write_instance(small, path);
      m.file = path;
    }
    found[id] = std::move(m);
  });

  CheckSummary summary;
  summary.checked = config.count;
  for (auto& m : found) {
    if (m) summary.mismatches.push_back(std::move(*m));
  }
  return summary;
}

}  // namespace ditree
