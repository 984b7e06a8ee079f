#pragma once

#include "ditree/report.hpp"
#include "ditree/tree.hpp"

namespace ditree {

/// Single-upgrade solver for N = 1 and r = 1 on every edge, in O(n).
///
/// If every leaf already meets M, the edge with the largest SRD increment is
/// upgraded. Otherwise the upgrade must lie on the shortest path P*: the
/// instance is infeasible when no edge of P* has enough slack, or when
/// several leaves fall short of M and no slack-sufficient edge of P* lies
/// above all of them. Among qualifying edges the largest increment wins;
/// ties go to the smallest edge index.
///
/// Throws std::invalid_argument when N != 1 or some r(e) != 1.
SolveReport solve_dit_n1(const TreeInstance& inst);

}  // namespace ditree
