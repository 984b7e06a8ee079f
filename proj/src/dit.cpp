#include "ditree/dit.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace ditree {

double bisection_scale(const TreeInstance& inst) {
  LeafControl lc = leaf_control(inst);
  return shortest_leaf(inst, inst.u()).distance + srd(lc, inst.u());
}

double srd_upper_bound(const TreeInstance& inst) {
  const int N = inst.params().N;
  LeafControl lc = leaf_control(inst);
  UpperWeights uw = upper_weights(inst, lc, inst.params().K);
  std::vector<double> best(N + 1, 0.0);
  for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
    for (int k = N; k >= inst.r(e); --k) {
      best[k] = std::max(best[k], best[k - inst.r(e)] + uw.increment[e]);
    }
  }
  return srd(lc, inst.w()) + best[N];
}

SolveReport solve_dit(const TreeInstance& inst, const DitOptions& options) {
  auto start = std::chrono::steady_clock::now();
  const Params& p = inst.params();
  if (p.N < 1) throw std::invalid_argument("solve_dit requires N >= 1");

  CitSolver solver(inst, p.K, p.N, CitOptions{options.recurrence, false});
  SolveReport report;
  std::map<double, CitSolution> evaluated;
  auto eval = [&](double lambda) -> const CitSolution& {
    auto it = evaluated.find(lambda);
    if (it == evaluated.end()) {
      ++report.cit_calls;
      it = evaluated.emplace(lambda, solver.solve(lambda)).first;
    }
    return it->second;
  };
  auto accepts = [&](double sp) {
    if (options.accept == AcceptRule::kAtLeast) return at_least(sp, p.M);
    return sp > p.M + kTolerance * std::max(1.0, std::abs(p.M));
  };
  auto finish = [&](const CitSolution& sol, Status status, std::string detail) {
    report.status = status;
    report.plan = sol.plan;
    report.objective = srd(solver.leaves(), report.plan.weights);
    ShortestLeaf sl = shortest_leaf(inst, report.plan.weights);
    report.min_path = sl.distance;
    if (status == Status::kInfeasible) report.witness_leaf = sl.leaf;
    report.detail = std::move(detail);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  const CitSolution& top = eval(1.0);
  if (!at_least(top.root.sp, p.M)) {
    return finish(top, Status::kInfeasible, "max shortest path under the budget is below M");
  }

  const double U = bisection_scale(inst);
  const double threshold = U > 1.0 ? 1.0 / (U * U) : 0.25;
  const double bound = options.early_exit ? srd_upper_bound(inst) : std::numeric_limits<double>::infinity();
  double lr = 0.0, rr = 1.0;
  bool stopped_early = false;
  while (rr - lr > threshold) {
    const double mid = 0.5 * (lr + rr);
    if (mid <= lr || mid >= rr) break;  // lambda resolution exhausted
    const CitSolution& sol = eval(mid);
    const bool accepted = accepts(sol.root.sp);
    report.trace.push_back({mid, sol.root.sp, sol.root.srd, accepted});
    if (accepted) {
      rr = mid;
      if (options.early_exit && at_least(sol.root.sp, p.M) && at_least(sol.root.srd, bound)) {
        stopped_early = true;
        break;
      }
    } else {
      lr = mid;
    }
  }
  report.lambda_star = rr;

  const CitSolution* chosen = &eval(rr);
  std::string detail = stopped_early ? "bisection stopped at the SRD bound" : "bisection converged";
  if (!at_least(chosen->root.sp, p.M)) {
    // Smallest evaluated lambda whose plan is feasible; lambda = 1 always is.
    for (const auto& [lambda, sol] : evaluated) {
      if (at_least(sol.root.sp, p.M)) {
        chosen = &sol;
        report.lambda_star = lambda;
        break;
      }
    }
    report.fallback_used = true;
    detail = "plan at lambda* missed M; fell back to a tested feasible plan";
  }
  return finish(*chosen, Status::kOptimal, detail);
}

}  // namespace ditree
