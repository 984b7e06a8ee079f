#include "ditree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ditree {
namespace {

constexpr double kTie = 1e-9;

bool within(double a, double b) { return std::abs(a - b) <= kTie * std::max({1.0, std::abs(a), std::abs(b)}); }

// Raw view of the instance with capped weights and per-edge leaf lists.
struct Enumeration {
  int n = 0;
  std::vector<double> base;      // w, slot 0 unused
  std::vector<double> lift;      // capped weight minus w
  std::vector<int> cost;         // r
  std::vector<std::vector<int>> leaves_of;  // leaf indices under each edge
  std::vector<double> base_path;  // per leaf

  Enumeration(const TreeInstance& inst, double K) {
    n = inst.node_count();
    base.assign(n + 1, 0.0);
    lift.assign(n + 1, 0.0);
    cost.assign(n + 1, 0);
    leaves_of.assign(n + 1, {});
    std::vector<char> has_child(n + 1, 0);
    for (int v = 1; v <= n; ++v) has_child[inst.parent(v)] = 1;
    for (int e = 1; e <= n; ++e) {
      base[e] = inst.w(e);
      double capped = inst.w(e) + K / inst.c(e);
      if (capped > inst.u(e)) capped = inst.u(e);
      lift[e] = capped - inst.w(e);
      cost[e] = inst.r(e);
    }
    for (int v = 1; v <= n; ++v) {
      if (has_child[v]) continue;
      const int leaf = static_cast<int>(base_path.size());
      double total = 0.0;
      for (int x = v; x != 0; x = inst.parent(x)) {
        total += base[x];
        leaves_of[x].push_back(leaf);
      }
      base_path.push_back(total);
    }
  }

  // Calls visit(min_path, srd, mask) for every subset with cost <= budget.
  template <typename Visit>
  std::uint64_t walk(long long budget, Visit visit) const {
    std::vector<double> path = base_path;
    double srd = 0.0;
    for (double x : base_path) srd += x;
    long long spent = 0;
    std::uint64_t mask = 0, visited = 0;
    auto emit = [&] {
      if (spent > budget) return;
      ++visited;
      visit(*std::min_element(path.begin(), path.end()), srd, mask);
    };
    emit();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
      const int bit = std::countr_zero(i);
      const int e = bit + 1;
      const std::uint64_t flag = std::uint64_t{1} << bit;
      const double sign = (mask & flag) ? -1.0 : 1.0;
      mask ^= flag;
      spent += static_cast<long long>(sign) * cost[e];
      for (int leaf : leaves_of[e]) path[leaf] += sign * lift[e];
      srd += sign * lift[e] * static_cast<double>(leaves_of[e].size());
      emit();
    }
    return visited;
  }
};

std::vector<EdgeId> edges_of(std::uint64_t mask) {
  std::vector<EdgeId> out;
  for (int bit = 0; mask; ++bit, mask >>= 1) {
    if (mask & 1) out.push_back(bit + 1);
  }
  return out;
}

// Tracks the maximum and every subset attaining it.
struct Best {
  OracleResult result;
  std::vector<std::uint64_t> masks;

  void offer(double value, std::uint64_t mask) {
    if (!result.best_value || (value > *result.best_value && !within(value, *result.best_value))) {
      result.best_value = value;
      masks.assign(1, mask);
    } else if (within(value, *result.best_value)) {
      masks.push_back(mask);
    }
  }
  OracleResult finish(std::uint64_t enumerated) {
    result.enumerated = enumerated;
    for (std::uint64_t m : masks) result.best_sets.push_back(edges_of(m));
    std::sort(result.best_sets.begin(), result.best_sets.end());
    return result;
  }
};

void check_cap(const TreeInstance& inst, int cap) {
  if (inst.edge_count() > cap || inst.edge_count() > 62) {
    throw std::invalid_argument("oracle: " + std::to_string(inst.edge_count()) + " edges exceeds the cap of " +
                                std::to_string(cap));
  }
}

bool reaches(double path, double M) { return path >= M || within(path, M); }

}  // namespace

OracleResult oracle_cit(const TreeInstance& inst, double K, int N, double lambda, int cap) {
  check_cap(inst, cap);
  Enumeration en(inst, K);
  Best best;
  auto count = en.walk(N, [&](double min_path, double srd, std::uint64_t mask) {
    best.offer(lambda * min_path + (1.0 - lambda) * srd, mask);
  });
  return best.finish(count);
}

OracleResult oracle_dit(const TreeInstance& inst, int cap) {
  check_cap(inst, cap);
  const Params& p = inst.params();
  Enumeration en(inst, p.K);
  Best best;
  auto count = en.walk(p.N, [&](double min_path, double srd, std::uint64_t mask) {
    if (reaches(min_path, p.M)) best.offer(srd, mask);
  });
  return best.finish(count);
}

OracleResult oracle_dit_single(const TreeInstance& inst) {
  const Params& p = inst.params();
  Enumeration en(inst, p.K);
  Best best;
  std::uint64_t count = 0;
  auto consider = [&](int edge) {
    ++count;
    std::vector<double> path = en.base_path;
    double srd = 0.0;
    if (edge > 0) {
      for (int leaf : en.leaves_of[edge]) path[leaf] += en.lift[edge];
    }
    for (double x : path) srd += x;
    if (reaches(*std::min_element(path.begin(), path.end()), p.M)) {
      std::vector<EdgeId> set;
      if (edge > 0) set.push_back(edge);
      if (!best.result.best_value || (srd > *best.result.best_value && !within(srd, *best.result.best_value))) {
        best.result.best_value = srd;
        best.result.best_sets.assign(1, set);
      } else if (within(srd, *best.result.best_value)) {
        best.result.best_sets.push_back(set);
      }
    }
  };
  for (int e = 0; e <= en.n; ++e) consider(e);
  best.result.enumerated = count;
  return best.result;
}

OracleResult oracle_mcdit(const TreeInstance& inst, int cap) {
  check_cap(inst, cap);
  const Params& p = inst.params();
  double top = 0.0;
  for (int e = 1; e <= inst.edge_count(); ++e) top = std::max(top, inst.c(e) * (inst.u(e) - inst.w(e)));
  const long long last = static_cast<long long>(std::ceil(top));
  std::uint64_t enumerated = 0;
  for (long long K = 0; K <= last; ++K) {
    Params q = p;
    q.K = static_cast<double>(K);
    OracleResult at = oracle_dit(inst.with_params(q), cap);
    enumerated += at.enumerated;
    if (at.best_value && reaches(*at.best_value, p.D)) {
      at.best_value = static_cast<double>(K);
      at.enumerated = enumerated;
      return at;
    }
  }
  OracleResult none;
  none.enumerated = enumerated;
  return none;
}

}  // namespace ditree
