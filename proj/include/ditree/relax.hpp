#pragma once

// Budget-capped upper weights and the relaxation without the Hamming budget.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ditree/report.hpp"
#include "ditree/tree.hpp"

namespace ditree {

/// Absolute tolerance used for budget and path comparisons on real data.
inline constexpr double kTolerance = 1e-9;

/// x >= bound, up to a relative tolerance.
inline bool at_least(double x, double bound) {
  return x >= bound - kTolerance * std::max(1.0, std::abs(bound));
}

struct UpperWeights {
  std::vector<double> bar_w;      // min(w + K/c, u)
  std::vector<double> slack;      // bar_w - w
  std::vector<double> increment;  // |L(e)| * slack
};

/// Throws std::invalid_argument for negative K.
UpperWeights upper_weights(const TreeInstance& inst, double K);
UpperWeights upper_weights(const TreeInstance& inst, const LeafControl& lc, double K);

/// Upgrades every edge to its cap. Infeasible when even that leaves a leaf
/// shorter than M; the report then names the shortest leaf.
SolveReport solve_dit_inf(const TreeInstance& inst);

}  // namespace ditree
