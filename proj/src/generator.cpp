#include "ditree/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ditree/relax.hpp"

namespace ditree {
namespace {

void check(const Range& range, const char* name) {
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.lo > range.hi) {
    throw std::invalid_argument(std::string("gen_instance: invalid ") + name + " range");
  }
}

}  // namespace

TreeInstance gen_instance(const InstanceFamily& f) {
  if (f.n < 1) throw std::invalid_argument("gen_instance: n must be positive");
  check(f.w, "w");
  check(f.u, "u");
  check(f.c, "c");
  check(f.r, "r");
  if (f.w.lo < 0) throw std::invalid_argument("gen_instance: w range must be nonnegative");
  if (f.u.hi < f.w.lo) throw std::invalid_argument("gen_instance: u range lies below the w range");
  if (f.c.lo <= 0) throw std::invalid_argument("gen_instance: c range must be positive");
  if (f.r.lo < 1) throw std::invalid_argument("gen_instance: r range must start at 1 or above");
  if (f.integral && std::ceil(f.c.lo) > std::floor(f.c.hi)) {
    throw std::invalid_argument("gen_instance: c range holds no integer");
  }

  std::mt19937_64 rng(f.seed);
  auto uniform = [&](Range range) {
    if (f.integral) {
      std::uniform_int_distribution<long long> d(static_cast<long long>(std::ceil(range.lo)),
                                                 static_cast<long long>(std::floor(range.hi)));
      return static_cast<double>(d(rng));
    }
    return std::uniform_real_distribution<double>(range.lo, range.hi)(rng);
  };
  auto fraction = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };

  const int n = f.n;
  std::vector<NodeId> parents(n);
  std::vector<double> w(n), u(n), c(n);
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) {
    parents[i] = std::uniform_int_distribution<int>(0, i)(rng);
    w[i] = uniform(f.w);
    u[i] = std::max(uniform(f.u), w[i]);
    c[i] = uniform(f.c);
    std::uniform_int_distribution<int> rd(static_cast<int>(std::ceil(f.r.lo)), static_cast<int>(std::floor(f.r.hi)));
    r[i] = rd(rng);
  }

  double k2 = 0.0;
  for (int i = 0; i < n; ++i) k2 = std::max(k2, c[i] * (u[i] - w[i]));
  Params p;
  p.K = k2 * fraction(0.25, 0.75);
  if (f.integral) {
    long long step = 1;
    for (long long v = static_cast<long long>(std::ceil(f.c.lo)); v <= static_cast<long long>(std::floor(f.c.hi)); ++v) {
      step = std::lcm(step, v);
      if (step > 1000000) throw std::invalid_argument("gen_instance: c range too wide for integral mode");
    }
    p.K = static_cast<double>(step) * std::round(p.K / static_cast<double>(step));
  }

  if (f.fixed_N) {
    p.N = *f.fixed_N;
  } else {
    int top = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    if (f.max_N) top = std::min(top, *f.max_N);
    p.N = std::uniform_int_distribution<int>(1, std::max(1, top))(rng);
  }

  // M and D depend on the drawn tree; build once with placeholders.
  TreeInstance draft = make_instance(parents, w, u, c, r, p);
  UpperWeights uw = upper_weights(draft, p.K);
  const double lo = shortest_leaf(draft, draft.w()).distance;
  const double hi = shortest_leaf(draft, uw.bar_w).distance;
  p.M = lo + fraction(0.0, 1.1) * (hi - lo);
  const double w_total = srd(draft, draft.w());
  const double u_total = srd(draft, draft.u());
  p.D = w_total + fraction(0.0, 0.6) * (u_total - w_total);
  if (f.integral) {
    p.M = std::round(p.M);
    p.D = std::round(p.D);
  }
  return draft.with_params(p);
}

TreeInstance unit_hamming_variant(const TreeInstance& inst) {
  RawInstance raw = to_raw(inst);
  for (RawEdge& e : raw.edges) e.r = 1.0;
  raw.params.N = 1;
  return build_instance(raw);
}

}  // namespace ditree
