#include "ditree/tree.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace ditree {
namespace {

std::optional<long long> as_index(const std::string& s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

bool is_whole(double x) { return std::isfinite(x) && std::floor(x) == x; }

std::string edge_name(const RawEdge& e) { return "(" + e.parent + "," + e.child + ")"; }

}  // namespace

TreeInstance TreeInstance::with_params(const Params& p) const {
  TreeInstance copy = *this;
  copy.params_ = p;
  return copy;
}

std::optional<NodeId> TreeInstance::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

TreeInstance build_instance(const RawInstance& raw) {
  if (raw.root.empty()) throw InstanceError("missing root");
  if (raw.edges.empty()) throw InstanceError("tree has no edges");

  const Params& p = raw.params;
  if (!std::isfinite(p.K) || p.K < 0) throw InstanceError("K must be a nonnegative number");
  if (p.N < 0) throw InstanceError("N must be nonnegative");
  if (!std::isfinite(p.M) || !std::isfinite(p.D)) throw InstanceError("M and D must be finite");

  // Each child label names exactly one edge.
  std::unordered_map<std::string, std::size_t> edge_of_child;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const RawEdge& e = raw.edges[i];
    if (e.child.empty() || e.parent.empty()) throw InstanceError("edge " + std::to_string(i) + ": empty node id");
    if (e.child == raw.root) throw InstanceError("cycle detected: root " + raw.root + " has a parent");
    if (e.child == e.parent) throw InstanceError("cycle detected: self loop at " + e.child);
    if (!edge_of_child.emplace(e.child, i).second) {
      throw InstanceError("duplicate edge into " + e.child);
    }
    if (!std::isfinite(e.w) || !std::isfinite(e.u) || !std::isfinite(e.c)) {
      throw InstanceError("edge " + edge_name(e) + ": non-finite value");
    }
    if (e.w < 0) throw InstanceError("edge " + edge_name(e) + ": w < 0");
    if (e.w > e.u) throw InstanceError("edge " + edge_name(e) + ": w > u");
    if (e.c <= 0) throw InstanceError("edge " + edge_name(e) + ": c <= 0");
    if (!is_whole(e.r) || e.r < 1) {
      throw InstanceError("edge " + edge_name(e) + ": r must be a positive integer");
    }
    if (e.r > std::numeric_limits<int>::max()) throw InstanceError("edge " + edge_name(e) + ": r too large");
  }
  for (const RawEdge& e : raw.edges) {
    if (e.parent != raw.root && !edge_of_child.contains(e.parent)) {
      throw InstanceError("disconnected node: " + e.parent + " has no parent and is not the root");
    }
  }

  // Dense indexing: integer labels sort numerically, anything else keeps
  // first-appearance order.
  std::vector<std::size_t> order(raw.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  bool numeric = std::all_of(raw.edges.begin(), raw.edges.end(),
                             [](const RawEdge& e) { return as_index(e.child).has_value(); });
  if (numeric) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return *as_index(raw.edges[a].child) < *as_index(raw.edges[b].child);
    });
  }

  const int n = static_cast<int>(raw.edges.size());
  TreeInstance inst;
  inst.labels_.resize(n + 1);
  inst.labels_[kRoot] = raw.root;
  std::unordered_map<std::string, NodeId> index{{raw.root, kRoot}};
  for (int k = 0; k < n; ++k) {
    inst.labels_[k + 1] = raw.edges[order[k]].child;
    index.emplace(raw.edges[order[k]].child, k + 1);
  }

  inst.parent_.assign(n + 1, -1);
  inst.children_.assign(n + 1, {});
  inst.w_.assign(n + 1, 0.0);
  inst.u_.assign(n + 1, 0.0);
  inst.c_.assign(n + 1, 0.0);
  inst.r_.assign(n + 1, 0);
  for (const RawEdge& e : raw.edges) {
    NodeId v = index.at(e.child);
    inst.parent_[v] = index.at(e.parent);
    inst.w_[v] = e.w;
    inst.u_[v] = e.u;
    inst.c_[v] = e.c;
    inst.r_[v] = static_cast<int>(e.r);
  }
  if (raw.order == ChildOrder::kAsListed) {
    for (const RawEdge& e : raw.edges) {
      inst.children_[inst.parent_[index.at(e.child)]].push_back(index.at(e.child));
    }
  } else {
    for (NodeId v = 1; v <= n; ++v) inst.children_[inst.parent_[v]].push_back(v);
  }

  // Pre-order from the root; anything unreached sits on a parent cycle.
  std::vector<NodeId> stack{kRoot};
  std::vector<char> seen(n + 1, 0);
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    seen[v] = 1;
    inst.preorder_.push_back(v);
    auto kids = inst.children_[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  for (NodeId v = 1; v <= n; ++v) {
    if (!seen[v]) throw InstanceError("cycle detected through node " + inst.labels_[v]);
  }

  inst.params_ = p;
  return inst;
}

TreeInstance make_instance(std::span<const NodeId> parents, std::span<const double> w,
                           std::span<const double> u, std::span<const double> c,
                           std::span<const int> r, const Params& params) {
  const std::size_t n = parents.size();
  if (w.size() != n || u.size() != n || c.size() != n || r.size() != n) {
    throw InstanceError("make_instance: attribute arrays differ in length");
  }
  RawInstance raw;
  raw.root = "0";
  raw.params = params;
  raw.edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw.edges.push_back({std::to_string(parents[i]), std::to_string(i + 1), w[i], u[i], c[i],
                         static_cast<double>(r[i])});
  }
  return build_instance(raw);
}

RawInstance to_raw(const TreeInstance& inst) {
  RawInstance raw;
  raw.root = inst.label(kRoot);
  raw.params = inst.params();
  raw.order = ChildOrder::kAsListed;
  for (NodeId v : inst.preorder()) {
    if (v == kRoot) continue;
    raw.edges.push_back({inst.label(inst.parent(v)), inst.label(v), inst.w(v), inst.u(v), inst.c(v),
                         static_cast<double>(inst.r(v))});
  }
  return raw;
}

std::vector<NodeId> LeafControl::leaf_set(EdgeId e) const {
  auto begin = leaves.begin() + first_leaf[e];
  return {begin, begin + control_count[e]};
}

LeafControl leaf_control(const TreeInstance& inst) {
  const int n = inst.node_count();
  LeafControl lc;
  lc.control_count.assign(n + 1, 0);
  lc.first_leaf.assign(n + 1, 0);
  // Pre-order visits leaves left to right, so each subtree's leaves are a
  // contiguous run; counts accumulate in reverse pre-order (a post-order).
  for (NodeId v : inst.preorder()) {
    lc.first_leaf[v] = static_cast<int>(lc.leaves.size());
    if (inst.is_leaf(v)) lc.leaves.push_back(v);
  }
  auto order = inst.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (inst.is_leaf(v)) lc.control_count[v] = 1;
    if (v != kRoot) lc.control_count[inst.parent(v)] += lc.control_count[v];
  }
  return lc;
}

double path_weight(const TreeInstance& inst, std::span<const double> weights, NodeId leaf) {
  if (leaf <= kRoot || leaf > inst.node_count() || !inst.is_leaf(leaf)) {
    throw InstanceError("node " + std::to_string(leaf) + " is not a leaf");
  }
  double total = 0.0;
  for (NodeId v = leaf; v != kRoot; v = inst.parent(v)) total += weights[v];
  return total;
}

std::vector<double> depth_weights(const TreeInstance& inst, std::span<const double> weights) {
  std::vector<double> depth(inst.node_count() + 1, 0.0);
  for (NodeId v : inst.preorder()) {
    if (v != kRoot) depth[v] = depth[inst.parent(v)] + weights[v];
  }
  return depth;
}

ShortestLeaf shortest_leaf(const TreeInstance& inst, std::span<const double> weights) {
  auto depth = depth_weights(inst, weights);
  ShortestLeaf best{std::numeric_limits<double>::infinity(), -1};
  for (NodeId v : inst.preorder()) {
    if (v != kRoot && inst.is_leaf(v) && depth[v] < best.distance) best = {depth[v], v};
  }
  return best;
}

double srd(const LeafControl& lc, std::span<const double> weights) {
  double total = 0.0;
  for (std::size_t e = 1; e < lc.control_count.size(); ++e) total += lc.control_count[e] * weights[e];
  return total;
}

double srd(const TreeInstance& inst, std::span<const double> weights) {
  LeafControl lc = leaf_control(inst);
  double total = srd(lc, weights);
#ifndef NDEBUG
  double by_leaf = 0.0;
  for (NodeId t : lc.leaves) by_leaf += path_weight(inst, weights, t);
  assert(std::abs(total - by_leaf) <= 1e-9 * std::max(1.0, std::abs(total)));
#endif
  return total;
}

bool is_integral(const TreeInstance& inst) {
  const Params& p = inst.params();
  if (!is_whole(p.K) || !is_whole(p.M) || !is_whole(p.D)) return false;
  for (EdgeId e = 1; e <= inst.edge_count(); ++e) {
    if (!is_whole(inst.w(e)) || !is_whole(inst.u(e)) || !is_whole(inst.c(e))) return false;
    double step = p.K / inst.c(e);
    if (!is_whole(step) && inst.w(e) + step < inst.u(e)) return false;
  }
  return true;
}

}  // namespace ditree
