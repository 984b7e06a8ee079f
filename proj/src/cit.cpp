#include "ditree/cit.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <stdexcept>

namespace ditree {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
  double sp;
  double srd;
  std::vector<EdgeId> edges;  // ascending
};

using Frontier = std::vector<Candidate>;
using BudgetRow = std::vector<Frontier>;  // indexed by budget k

double slack_for(double x) { return kTolerance * std::max(1.0, std::abs(x)); }

class Scalarizer {
 public:
  explicit Scalarizer(double lambda) : lambda_(lambda) {}

  double h(double sp, double srd) const {
    if (std::isinf(sp)) return lambda_ > 0 ? kInf : srd;
    return lambda_ * sp + (1.0 - lambda_) * srd;
  }
  double h(const Candidate& c) const { return h(c.sp, c.srd); }

  // Root preference: h (within tolerance), then larger sp, larger srd,
  // fewer edges, lexicographically smaller edge list.
  bool prefers(const Candidate& a, const Candidate& b) const {
    double ha = h(a), hb = h(b);
    double tol = slack_for(std::max(std::abs(ha), std::abs(hb)));
    if (ha > hb + tol) return true;
    if (hb > ha + tol) return false;
    if (a.sp != b.sp) return a.sp > b.sp;
    if (a.srd != b.srd) return a.srd > b.srd;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  }

  const Candidate& best(const Frontier& f) const {
    const Candidate* top = &f.front();
    for (const Candidate& c : f) {
      if (prefers(c, *top)) top = &c;
    }
    return *top;
  }

 private:
  double lambda_;
};

// Drops candidates that cannot be part of a root-optimal plan.
//
// Pareto pass: ordered by sp descending, a candidate survives only if its
// srd beats every candidate before it. Lambda pass: for survivors a (higher
// sp) and b (lower sp, higher srd), any completion gains at most
// lambda*(sp_a - sp_b) - (1-lambda)*(srd_b - srd_a) = h(a) - h(b) by choosing
// a, so a is dropped when h(a) falls below some later h(b).
void prune(Frontier& f, const Scalarizer& s, CitRecurrence recurrence) {
  if (f.size() <= 1) return;
  if (recurrence == CitRecurrence::kSingleState) {
    Candidate top = s.best(f);
    f.clear();
    f.push_back(std::move(top));
    return;
  }
  std::sort(f.begin(), f.end(), [](const Candidate& a, const Candidate& b) {
    if (a.sp != b.sp) return a.sp > b.sp;
    if (a.srd != b.srd) return a.srd > b.srd;
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  Frontier pareto;
  double best_srd = -kInf;
  for (Candidate& c : f) {
    if (c.srd > best_srd) {
      best_srd = c.srd;
      pareto.push_back(std::move(c));
    }
  }
  Frontier kept;
  double max_h = -kInf;
  for (auto it = pareto.rbegin(); it != pareto.rend(); ++it) {
    double h = s.h(*it);
    if (std::isinf(max_h) || h >= max_h - slack_for(max_h)) kept.push_back(std::move(*it));
    max_h = std::max(max_h, h);
  }
  std::reverse(kept.begin(), kept.end());
  f = std::move(kept);
}

std::vector<EdgeId> merged(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  std::vector<EdgeId> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DPState to_state(const Candidate& c, const Scalarizer& s) {
  return DPState{c.sp, c.srd, s.h(c), c.edges};
}

}  // namespace

CitSolver::CitSolver(const TreeInstance& inst, double K, int N, CitOptions options)
    : inst_(inst), budget_(N), options_(options), leaves_(leaf_control(inst)),
      upper_(upper_weights(inst, leaves_, K)) {
  if (N < 0) throw std::invalid_argument("solve_cit: N must be nonnegative");
}

CitSolution CitSolver::solve(double lambda) const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("solve_cit: lambda must lie in [0, 1]");
  const Scalarizer s(lambda);
  const int n = inst_.node_count();
  const int N = budget_;
  CitSolution out;

  auto record = [&](const BudgetRow& row, NodeId v, int p, bool prefix) {
    for (int k = 0; k <= N; ++k) {
      const Frontier& f = row[k];
      ++out.stats.states;
      out.stats.candidates += f.size();
      out.stats.max_frontier = std::max(out.stats.max_frontier, f.size());
      if (options_.keep_table) {
        out.table.push_back({v, p, k, prefix, to_state(s.best(f), s), f.size()});
      }
    }
  };

  // Full state (v, 1:|S(v)|, k) of every processed node, released once the
  // parent has consumed it.
  std::vector<BudgetRow> full(n + 1);
  const BudgetRow leaf_row(N + 1, Frontier{Candidate{0.0, 0.0, {}}});

  auto order = inst_.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    auto kids = inst_.children(v);
    if (kids.empty()) {
      full[v] = leaf_row;
      continue;
    }
    BudgetRow prefix(N + 1, Frontier{Candidate{kInf, 0.0, {}}});  // (v, 1:0, k)
    for (int p = 1; p <= static_cast<int>(kids.size()); ++p) {
      const EdgeId e = kids[p - 1];
      const double ctrl = leaves_.control_count[e];
      const BudgetRow& below = full[e];

      // (v, p:p, k): keep e at w, or lift it to bar_w and pay r(e).
      BudgetRow single(N + 1);
      for (int k = 0; k <= N; ++k) {
        Frontier& f = single[k];
        for (const Candidate& c : below[k]) {
          f.push_back({c.sp + inst_.w(e), c.srd + ctrl * inst_.w(e), c.edges});
        }
        if (k >= inst_.r(e)) {
          const double lifted = upper_.bar_w[e];
          for (const Candidate& c : below[k - inst_.r(e)]) {
            f.push_back({c.sp + lifted, c.srd + ctrl * lifted, merged(c.edges, {e})});
          }
        }
        prune(f, s, options_.recurrence);
      }
      full[e].clear();
      full[e].shrink_to_fit();

      // (v, 1:p, k): split k between the previous prefix and child p.
      BudgetRow next(N + 1);
      for (int k = 0; k <= N; ++k) {
        Frontier& f = next[k];
        for (int left = 0; left <= k; ++left) {
          for (const Candidate& a : prefix[left]) {
            for (const Candidate& b : single[k - left]) {
              f.push_back({std::min(a.sp, b.sp), a.srd + b.srd, merged(a.edges, b.edges)});
            }
          }
        }
        prune(f, s, options_.recurrence);
      }
      record(single, v, p, false);
      record(next, v, p, true);
      prefix = std::move(next);
    }
    full[v] = std::move(prefix);
  }

  const Candidate& top = s.best(full[kRoot][N]);
  out.root = to_state(top, s);
  out.plan = make_plan(inst_, top.edges, upper_.bar_w);
  return out;
}

CitSolution solve_cit(const TreeInstance& inst, double K, int N, double lambda, CitOptions options) {
  return CitSolver(inst, K, N, options).solve(lambda);
}

}  // namespace ditree
