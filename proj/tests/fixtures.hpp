#pragma once

#include <array>

#include "ditree/tree.hpp"

namespace fixtures {

// s -> a (2, 6, 1, r1), a -> b (3, 4, 2, r_ab), s -> t (1, 10, 1, 1).
// Node ids: s = 0, a = 1, b = 2, t = 3.
inline ditree::TreeInstance three_edge(double M, double K, int N, double D = 0.0, int r_ab = 2) {
  ditree::RawInstance raw;
  raw.root = "s";
  raw.order = ditree::ChildOrder::kAsListed;
  raw.edges = {{"s", "a", 2, 6, 1, 1}, {"a", "b", 3, 4, 2, static_cast<double>(r_ab)}, {"s", "t", 1, 10, 1, 1}};
  raw.params = {M, K, N, D};
  return ditree::build_instance(raw);
}

inline constexpr ditree::EdgeId kA = 1, kB = 2, kT = 3;

// Root with a two-edge chain, an upgradable edge and a frozen zero leaf.
// At lambda = 1/2 the second child ties in h between a deep chain upgrade and
// a split upgrade; the single-state recurrence keeps the split (larger sp),
// which the zero leaf then hides.
inline ditree::TreeInstance min_hiding() {
  const std::array<ditree::NodeId, 4> parents{0, 1, 0, 0};
  const std::array<double, 4> w{0, 0, 0, 0}, u{18, 12, 20, 0}, c{1, 1, 4, 1};
  const std::array<int, 4> r{1, 1, 1, 1};
  return ditree::make_instance(parents, w, u, c, r, {7, 24, 2, 28});
}

}  // namespace fixtures

namespace fixtures {

// Leaves 9 (via 1) and 3 (via 2). Pareto plans in (shortest path, SRD):
// {2,3} = (5, 34), {1,3} = (7, 29), {9} = (10, 27). With M = 6 the optimum
// {1,3} sits below the segment joining its neighbours, so no lambda selects it.
inline ditree::TreeInstance nonsupported_optimum() {
  ditree::RawInstance raw;
  raw.root = "0";
  raw.edges = {{"0", "1", 0, 2, 1, 2}, {"0", "2", 10, 17, 1, 1}, {"2", "3", 0, 12, 1, 1}, {"1", "9", 5, 17, 1, 3}};
  raw.params = {6, 24, 3, 107};
  return ditree::build_instance(raw);
}

}  // namespace fixtures
