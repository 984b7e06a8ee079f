#pragma once

#include "ditree/dit.hpp"
#include "ditree/report.hpp"
#include "ditree/tree.hpp"

namespace ditree {

struct McditOptions {
  DitOptions dit;
  // After the integer search, also try the real breakpoints c(e)(u(e)-w(e))
  // inside (K*-1, K*] and keep the smallest one that passes.
  bool refine_real = false;
};

/// Integer ceiling of max_e c(e)(u(e) - w(e)), the budget at which every
/// edge can reach u.
double max_useful_budget(const TreeInstance& inst);

/// Smallest integer K in [0, K2] for which the bisection solver returns a
/// feasible plan with SRD >= D. Searches by halving with mid = floor((lo+hi)/2)
/// and checks K = 0 when the lower end was never evaluated. `k_star` and
/// `dit_calls` are set on the report; N must be at least 1.
SolveReport solve_mcdit(const TreeInstance& inst, const McditOptions& options = {});

}  // namespace ditree
