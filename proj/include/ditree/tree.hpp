#pragma once

// Rooted edge-weighted trees for the double interdiction solvers.
//
// Nodes are dense indices 0..n with 0 the root. Every non-root node v owns
// exactly one edge, (parent(v), v), and that edge is addressed by v itself,
// so all per-edge arrays are indexed by child node and slot 0 is unused.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ditree {

using NodeId = int;
using EdgeId = int;  // child node of the edge

inline constexpr NodeId kRoot = 0;

/// Thrown when raw records do not describe a valid instance.
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Params {
  double M = 0.0;  // lower bound on the shortest root-leaf distance
  double K = 0.0;  // l-infinity cost budget
  int N = 0;       // weighted Hamming budget
  double D = 0.0;  // SRD target for the minimum-cost problem

  friend bool operator==(const Params&, const Params&) = default;
};

struct RawEdge {
  std::string parent;
  std::string child;
  double w = 0.0;
  double u = 0.0;
  double c = 1.0;
  double r = 1.0;  // kept real so non-integral input can be rejected
};

enum class ChildOrder { kAscending, kAsListed };

struct RawInstance {
  std::string root;
  std::vector<RawEdge> edges;
  Params params;
  ChildOrder order = ChildOrder::kAscending;
};

class TreeInstance {
 public:
  /// Number of non-root nodes (== number of edges).
  int node_count() const { return static_cast<int>(parent_.size()) - 1; }
  int edge_count() const { return node_count(); }

  NodeId parent(NodeId v) const { return parent_[v]; }
  std::span<const NodeId> children(NodeId v) const { return children_[v]; }
  bool is_leaf(NodeId v) const { return children_[v].empty(); }

  double w(EdgeId e) const { return w_[e]; }
  double u(EdgeId e) const { return u_[e]; }
  double c(EdgeId e) const { return c_[e]; }
  int r(EdgeId e) const { return r_[e]; }

  std::span<const double> w() const { return w_; }
  std::span<const double> u() const { return u_; }

  const Params& params() const { return params_; }
  /// Copy with different problem parameters; the tree itself is shared data.
  TreeInstance with_params(const Params& p) const;

  /// External label of a node, as it appeared in the input.
  const std::string& label(NodeId v) const { return labels_[v]; }
  std::optional<NodeId> find(const std::string& label) const;

  /// Nodes in DFS pre-order (children visited in stored order).
  std::span<const NodeId> preorder() const { return preorder_; }

  friend TreeInstance build_instance(const RawInstance& raw);

  friend bool operator==(const TreeInstance&, const TreeInstance&) = default;

 private:
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<double> w_, u_, c_;
  std::vector<int> r_;
  std::vector<std::string> labels_;
  std::vector<NodeId> preorder_;
  Params params_;
};

/// Validates raw records and produces an instance. Throws InstanceError on a
/// missing root, unknown or duplicate nodes, cycles, disconnected nodes,
/// w > u, c <= 0, non-integral or non-positive r, or invalid K / N.
TreeInstance build_instance(const RawInstance& raw);

/// Raw records reproducing `inst` (edges listed in pre-order, as-listed child
/// order), for rebuilding modified copies.
RawInstance to_raw(const TreeInstance& inst);

/// Convenience for tests and generators: node i has parent parents[i-1] and
/// edge data (w[i-1], u[i-1], c[i-1], r[i-1]); labels are decimal indices.
TreeInstance make_instance(std::span<const NodeId> parents, std::span<const double> w,
                           std::span<const double> u, std::span<const double> c,
                           std::span<const int> r, const Params& params);

struct LeafControl {
  std::vector<NodeId> leaves;       // traversal order
  std::vector<int> control_count;   // |L(e)| per edge, slot 0 = number of leaves
  // Euler-tour interval of each node's subtree over leaf positions: leaves
  // controlled by e_v are leaves[first[v] .. first[v] + control_count[v]).
  std::vector<int> first_leaf;

  bool controls(EdgeId e, int leaf_position) const {
    return leaf_position >= first_leaf[e] && leaf_position < first_leaf[e] + control_count[e];
  }
  /// Materialized L(e); intended for small trees.
  std::vector<NodeId> leaf_set(EdgeId e) const;
};

LeafControl leaf_control(const TreeInstance& inst);

/// Sum of `weights` along the root path of `leaf`. Throws InstanceError if
/// the node is not a leaf.
double path_weight(const TreeInstance& inst, std::span<const double> weights, NodeId leaf);

/// Path weight of every node from the root (root = 0).
std::vector<double> depth_weights(const TreeInstance& inst, std::span<const double> weights);

/// Shortest root-leaf distance under `weights`, and the leaf attaining it
/// (smallest traversal position on ties).
struct ShortestLeaf {
  double distance;
  NodeId leaf;
};
ShortestLeaf shortest_leaf(const TreeInstance& inst, std::span<const double> weights);

/// Sum of root-leaf distances, computed as sum_e |L(e)| * weights(e). In
/// debug builds the per-leaf summation is cross-checked.
double srd(const TreeInstance& inst, std::span<const double> weights);
double srd(const LeafControl& lc, std::span<const double> weights);

/// True when every datum is integral and each K / c(e) is integral or capped
/// by u(e), so solver arithmetic is exact in doubles.
bool is_integral(const TreeInstance& inst);

}  // namespace ditree
