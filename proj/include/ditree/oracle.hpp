#pragma once

// Exhaustive reference solvers. Every upgraded edge goes straight to its
// capped weight, so each problem reduces to choosing a subset of edges with
// sum r(e) <= N. Subsets are walked in Gray-code order with incremental path
// and SRD updates. Nothing here reuses the solver code paths: capped weights,
// leaf sets and path sums are recomputed from the raw instance fields.

#include <cstdint>
#include <optional>
#include <vector>

#include "ditree/tree.hpp"

namespace ditree {

inline constexpr int kOracleEdgeCap = 16;

struct OracleResult {
  std::optional<double> best_value;               // nullopt when infeasible
  std::vector<std::vector<EdgeId>> best_sets;     // every optimal subset, ascending
  std::uint64_t enumerated = 0;                   // subsets within the budget
};

/// Throws std::invalid_argument when the instance has more than `cap` edges.
OracleResult oracle_cit(const TreeInstance& inst, double K, int N, double lambda,
                        int cap = kOracleEdgeCap);

/// Max SRD over budget-feasible subsets whose shortest path reaches M.
OracleResult oracle_dit(const TreeInstance& inst, int cap = kOracleEdgeCap);

/// Same, restricted to the empty plan and single-edge plans (budget ignored).
OracleResult oracle_dit_single(const TreeInstance& inst);

/// Smallest integer K in [0, ceil(max c(u-w))] with oracle_dit feasible and
/// SRD >= D, by linear scan. best_value holds that K; best_sets its optimal
/// subsets.
OracleResult oracle_mcdit(const TreeInstance& inst, int cap = kOracleEdgeCap);

}  // namespace ditree
