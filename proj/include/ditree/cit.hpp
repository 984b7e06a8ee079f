#pragma once

// Dynamic program for the scalarized problem
//
//   max  lambda * StRD(w_hat) + (1 - lambda) * SRD(w_hat)
//   s.t. sum of r(e) over upgraded edges <= N,  upgraded edges sit at bar_w.
//
// States follow the left p:q-subtree decomposition: for every node v,
// child index p and budget k there is a single-child state (v, p:p, k) and a
// prefix state (v, 1:p, k). A single-child state either keeps the edge to
// child p at w or lifts it to bar_w and charges r(e); a prefix state splits
// k between (v, 1:p-1) and (v, p:p).
//
// Because StRD combines by min, the h-optimal plan of a subtree is not always
// part of the h-optimal plan of its parent: a subtree can trade SRD for a
// longer shortest path that a shorter sibling then hides. The default
// recurrence therefore carries, per state, the (sp, srd) candidates that can
// still win at the root: Pareto-optimal in (sp, srd), and never dropping a
// higher-sp candidate unless a lower-sp one already beats it in h. The
// textbook single-state recurrence is available as kSingleState.

#include <cstddef>
#include <vector>

#include "ditree/relax.hpp"
#include "ditree/report.hpp"
#include "ditree/tree.hpp"

namespace ditree {

enum class CitRecurrence {
  kFrontier,     // exact
  kSingleState,  // one h-best candidate per state; can be suboptimal
};

struct CitOptions {
  CitRecurrence recurrence = CitRecurrence::kFrontier;
  bool keep_table = false;  // retain every state for inspection
};

/// Value of one DP state. `sp` is +inf only for the empty prefix.
struct DPState {
  double sp = 0.0;
  double srd = 0.0;
  double h = 0.0;
  std::vector<EdgeId> upgrades;  // ascending
};

struct TableEntry {
  NodeId node;
  int p;  // child index, 1-based
  int k;
  bool prefix;  // (v, 1:p, k) if true, (v, p:p, k) otherwise
  DPState state;
  std::size_t frontier;
};

struct CitStats {
  std::size_t states = 0;
  std::size_t candidates = 0;  // total candidates retained over all states
  std::size_t max_frontier = 0;
};

struct CitSolution {
  DPState root;
  UpgradePlan plan;
  CitStats stats;
  std::vector<TableEntry> table;  // filled when keep_table
};

/// Solver bound to one instance and budget pair; bar_w and leaf counts are
/// computed once and reused for every lambda.
class CitSolver {
 public:
  CitSolver(const TreeInstance& inst, double K, int N, CitOptions options = {});

  /// Throws std::invalid_argument when lambda is outside [0, 1].
  CitSolution solve(double lambda) const;

  const UpperWeights& upper() const { return upper_; }
  const LeafControl& leaves() const { return leaves_; }
  int budget() const { return budget_; }

 private:
  const TreeInstance& inst_;
  int budget_;
  CitOptions options_;
  LeafControl leaves_;
  UpperWeights upper_;
};

/// Throws std::invalid_argument for lambda outside [0, 1] or negative N.
CitSolution solve_cit(const TreeInstance& inst, double K, int N, double lambda,
                      CitOptions options = {});

}  // namespace ditree
