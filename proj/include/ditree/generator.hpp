#pragma once

// Random benchmark trees.
//
// Topology is uniform attachment: node i picks its parent uniformly from
// 0..i-1. Edge data is uniform over the family ranges (integers when
// `integral` is set) with u clamped up to w. Parameters, with
// t ~ Uniform and K2 = max_e c(e)(u(e) - w(e)):
//   K = K2 * Uniform[0.25, 0.75]   (a multiple of lcm(c range) when integral)
//   N = Uniform{1 .. ceil(sqrt(n))}, capped at max_N when set
//   M = lo + Uniform[0, 1.1] * (hi - lo), lo / hi the shortest path under w / bar_w
//   D = w(T) + Uniform[0, 0.6] * (u(T) - w(T))
// The 1.1 factor makes roughly one instance in eleven infeasible already in
// the relaxation.

#include <cstdint>
#include <optional>

#include "ditree/tree.hpp"

namespace ditree {

struct Range {
  double lo;
  double hi;
};

struct InstanceFamily {
  int n = 10;
  std::uint64_t seed = 1;
  Range w{0.0, 10.0};
  Range u{10.0, 20.0};
  Range c{1.0, 4.0};
  Range r{1.0, 1.0};
  bool integral = true;
  std::optional<int> max_N;
  std::optional<int> fixed_N;  // overrides the N rule
};

/// Throws std::invalid_argument on empty / inverted ranges, u entirely below
/// w, nonpositive c, r below 1, or n < 1.
TreeInstance gen_instance(const InstanceFamily& family);

/// Same tree with r(e) = 1 everywhere and N = 1.
TreeInstance unit_hamming_variant(const TreeInstance& inst);

}  // namespace ditree
