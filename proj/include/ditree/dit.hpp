#pragma once

// Bisection over the scalarization weight lambda. At lambda = 1 the DP
// maximizes the shortest path, so a shortfall there proves infeasibility.
// Otherwise [lr, rr] = [0, 1] is halved until its width drops to 1/U^2 with
// U = min_k u(P_k) + sum_e |L(e)| u(e): a midpoint whose plan exceeds M
// (or reaches it, under kAtLeast) moves rr down, any other moves lr up. The plan at lambda* = rr is returned.

#include "ditree/cit.hpp"
#include "ditree/report.hpp"
#include "ditree/tree.hpp"

namespace ditree {

enum class AcceptRule {
  kAtLeast,  // sp_mid >= M
  kStrict,   // sp_mid > M
};

struct DitOptions {
  AcceptRule accept = AcceptRule::kAtLeast;
  // Stop as soon as an accepted midpoint plan reaches the knapsack bound on
  // SRD (the lambda = 0 optimum); no smaller lambda can do better.
  bool early_exit = true;
  CitRecurrence recurrence = CitRecurrence::kFrontier;
};

/// U as defined above.
double bisection_scale(const TreeInstance& inst);

/// Largest SRD reachable within the Hamming budget, ignoring M: a 0-1
/// knapsack over per-edge increments, O(nN).
double srd_upper_bound(const TreeInstance& inst);

/// Throws std::invalid_argument when N < 1.
SolveReport solve_dit(const TreeInstance& inst, const DitOptions& options = {});

}  // namespace ditree
