#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ditree/tree.hpp"

namespace ditree {

enum class Status { kOptimal, kInfeasible };

inline const char* to_string(Status s) { return s == Status::kOptimal ? "optimal" : "infeasible"; }

/// An upgrade decision: the edges moved off w, and the resulting weights
/// (indexed by child node, slot 0 unused).
struct UpgradePlan {
  std::vector<EdgeId> upgraded;  // ascending
  std::vector<double> weights;
};

/// Applies `edges` at their capped weights, leaving every other edge at w.
UpgradePlan make_plan(const TreeInstance& inst, std::vector<EdgeId> edges,
                      const std::vector<double>& capped);

struct BisectionStep {
  double lambda;
  double sp;
  double srd;
  bool accepted;
};

struct SolveReport {
  Status status = Status::kInfeasible;
  double objective = 0.0;  // SRD of the plan (h for the scalarized problem)
  double min_path = 0.0;   // StRD of the plan
  UpgradePlan plan;

  std::optional<double> lambda_star;
  std::optional<double> k_star;
  std::optional<NodeId> witness_leaf;  // argmin leaf behind an infeasibility verdict
  std::string detail;                  // which branch decided the outcome

  int cit_calls = 0;
  int dit_calls = 0;
  std::vector<BisectionStep> trace;
  bool fallback_used = false;  // lambda* plan was infeasible and a tested plan replaced it
  double wall_seconds = 0.0;

  bool feasible() const { return status == Status::kOptimal; }
};

}  // namespace ditree
