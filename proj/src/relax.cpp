#include "ditree/relax.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace ditree {

UpgradePlan make_plan(const TreeInstance& inst, std::vector<EdgeId> edges,
                      const std::vector<double>& capped) {
  std::sort(edges.begin(), edges.end());
  UpgradePlan plan;
  plan.weights.assign(inst.w().begin(), inst.w().end());
  for (EdgeId e : edges) plan.weights[e] = capped[e];
  plan.upgraded = std::move(edges);
  return plan;
}

UpperWeights upper_weights(const TreeInstance& inst, const LeafControl& lc, double K) {
  if (!(K >= 0)) throw std::invalid_argument("upper_weights: K must be nonnegative");
  const int n = inst.edge_count();
  UpperWeights uw;
  uw.bar_w.assign(n + 1, 0.0);
  uw.slack.assign(n + 1, 0.0);
  uw.increment.assign(n + 1, 0.0);
  for (EdgeId e = 1; e <= n; ++e) {
    uw.bar_w[e] = std::min(inst.w(e) + K / inst.c(e), inst.u(e));
    uw.slack[e] = uw.bar_w[e] - inst.w(e);
    uw.increment[e] = lc.control_count[e] * uw.slack[e];
  }
  return uw;
}

UpperWeights upper_weights(const TreeInstance& inst, double K) {
  return upper_weights(inst, leaf_control(inst), K);
}

SolveReport solve_dit_inf(const TreeInstance& inst) {
  auto start = std::chrono::steady_clock::now();
  LeafControl lc = leaf_control(inst);
  UpperWeights uw = upper_weights(inst, lc, inst.params().K);

  SolveReport report;
  std::vector<EdgeId> moved;
  for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
    if (uw.slack[e] > 0) moved.push_back(e);
  }
  report.plan = make_plan(inst, std::move(moved), uw.bar_w);
  ShortestLeaf shortest = shortest_leaf(inst, report.plan.weights);
  report.min_path = shortest.distance;
  report.objective = srd(lc, report.plan.weights);
  if (!at_least(shortest.distance, inst.params().M)) {
    report.status = Status::kInfeasible;
    report.witness_leaf = shortest.leaf;
    report.detail = "capped weights leave leaf " + inst.label(shortest.leaf) + " below M";
  } else {
    report.status = Status::kOptimal;
    report.detail = "all edges at capped weight";
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ditree
