#include "ditree/mcdit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "ditree/relax.hpp"

namespace ditree {

double max_useful_budget(const TreeInstance& inst) {
  double top = 0.0;
  for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
    top = std::max(top, inst.c(e) * (inst.u(e) - inst.w(e)));
  }
  return std::ceil(top);
}

SolveReport solve_mcdit(const TreeInstance& inst, const McditOptions& options) {
  auto start = std::chrono::steady_clock::now();
  const Params base = inst.params();
  int calls = 0;
  std::map<double, SolveReport> runs;
  auto run = [&](double K) -> const SolveReport& {
    auto it = runs.find(K);
    if (it == runs.end()) {
      Params p = base;
      p.K = K;
      ++calls;
      it = runs.emplace(K, solve_dit(inst.with_params(p), options.dit)).first;
    }
    return it->second;
  };
  auto reaches = [&](double K) {
    const SolveReport& r = run(K);
    return r.feasible() && at_least(r.objective, base.D);
  };
  auto finish = [&](double K, bool ok, std::string detail) {
    SolveReport report = run(K);
    if (!ok) report.status = Status::kInfeasible;
    if (ok) report.k_star = K;
    report.dit_calls = calls;
    report.detail = std::move(detail);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  double hi = max_useful_budget(inst);
  if (!reaches(hi)) {
    return finish(hi, false, run(hi).feasible() ? "D unreachable even at the full budget"
                                                 : "M unreachable even at the full budget");
  }
  double lo = 0.0;
  bool lo_tested = false;  // a tested lo always failed
  while (hi - lo > 1.0) {
    const double mid = std::floor(0.5 * (lo + hi));
    if (reaches(mid)) {
      hi = mid;
    } else {
      lo = mid;
      lo_tested = true;
    }
  }
  double k_star = hi;
  if (!lo_tested && lo < hi && reaches(lo)) k_star = lo;

  if (options.refine_real && k_star > 0) {
    std::vector<double> breakpoints;
    for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
      double b = inst.c(e) * (inst.u(e) - inst.w(e));
      if (b > k_star - 1.0 && b < k_star) breakpoints.push_back(b);
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    for (double b : breakpoints) {
      if (reaches(b)) {
        k_star = b;
        break;
      }
    }
  }
  return finish(k_star, true, "minimum budget found");
}

}  // namespace ditree
