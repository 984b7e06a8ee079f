#include "ditree/greedy.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#include "ditree/relax.hpp"

namespace ditree {
namespace {

// Largest increment among candidate edges; first (smallest index) wins ties.
template <typename Pred>
EdgeId argmax_increment(const TreeInstance& inst, const UpperWeights& uw, Pred eligible) {
  EdgeId best = -1;
  for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
    if (!eligible(e)) continue;
    if (best < 0 || uw.increment[e] > uw.increment[best]) best = e;
  }
  return best;
}

}  // namespace

SolveReport solve_dit_n1(const TreeInstance& inst) {
  auto start = std::chrono::steady_clock::now();
  const Params& p = inst.params();
  if (p.N != 1) throw std::invalid_argument("solve_dit_n1 requires N = 1");
  for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
    if (inst.r(e) != 1) throw std::invalid_argument("solve_dit_n1 requires r(e) = 1 on every edge");
  }

  LeafControl lc = leaf_control(inst);
  UpperWeights uw = upper_weights(inst, lc, p.K);
  std::vector<double> depth = depth_weights(inst, inst.w());

  int shortest_pos = 0;
  for (int i = 1; i < static_cast<int>(lc.leaves.size()); ++i) {
    if (depth[lc.leaves[i]] < depth[lc.leaves[shortest_pos]]) shortest_pos = i;
  }
  const NodeId shortest = lc.leaves[shortest_pos];

  SolveReport report;
  auto finish = [&](EdgeId chosen, std::string detail) {
    if (chosen < 0) {
      report.status = Status::kInfeasible;
      report.witness_leaf = shortest;
      report.plan = make_plan(inst, {}, uw.bar_w);
    } else {
      report.status = Status::kOptimal;
      report.plan = make_plan(inst, {chosen}, uw.bar_w);
    }
    report.objective = srd(lc, report.plan.weights);
    report.min_path = shortest_leaf(inst, report.plan.weights).distance;
    report.detail = std::move(detail);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  if (at_least(depth[shortest], p.M)) {
    return finish(argmax_increment(inst, uw, [](EdgeId) { return true; }), "M already met");
  }

  const double gap = p.M - depth[shortest];
  double path_slack = 0.0;
  for (NodeId v = shortest; v != kRoot; v = inst.parent(v)) path_slack = std::max(path_slack, uw.slack[v]);
  if (!at_least(path_slack, gap)) return finish(-1, "no edge on the shortest path has enough slack");

  // Short leaves occupy positions [lo, hi] of the leaf order; an edge
  // controls all of them iff its leaf interval covers that span.
  int lo = std::numeric_limits<int>::max(), hi = -1, short_count = 0;
  for (int i = 0; i < static_cast<int>(lc.leaves.size()); ++i) {
    if (!at_least(depth[lc.leaves[i]], p.M)) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
      ++short_count;
    }
  }
  std::vector<char> on_path(inst.edge_count() + 1, 0);
  for (NodeId v = shortest; v != kRoot; v = inst.parent(v)) on_path[v] = 1;
  EdgeId chosen = argmax_increment(inst, uw, [&](EdgeId e) {
    return on_path[e] && at_least(uw.slack[e], gap) && lc.controls(e, lo) && lc.controls(e, hi);
  });
  if (chosen < 0) return finish(-1, "no single edge lifts every short leaf");
  return finish(chosen, short_count == 1 ? "one short leaf" : "several short leaves share an edge");
}

}  // namespace ditree
