#pragma once

// Solver-versus-oracle sweeps over random small instances, with greedy
// shrinking of any instance on which the two disagree.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ditree/tree.hpp"

namespace ditree {

enum class Problem { kRelax, kDit1, kCit, kDit, kMcdit };

const char* to_string(Problem p);
/// Accepts relax, dit1, cit, dit, mcdit.
Problem parse_problem(const std::string& name);

/// Describes the disagreement between solver and oracle on `inst`, if any.
/// With `mutate`, the solver side runs on a deliberately corrupted input
/// (K halved for relax / dit1, N - 1 for the others when N >= 2) so the
/// harness itself can be tested.
std::optional<std::string> compare_with_oracle(Problem problem, const TreeInstance& inst, bool mutate = false);

/// Repeatedly drops leaves and simplifies edge data while `fails` keeps
/// holding. Returns the smallest failing instance found.
TreeInstance minimize_instance(const TreeInstance& inst, const std::function<bool(const TreeInstance&)>& fails);

struct CheckConfig {
  Problem problem = Problem::kCit;
  int count = 200;
  int max_n = 12;
  int max_N = 4;
  int max_r = 3;
  std::uint64_t seed = 1;
  bool mutate = false;
  int workers = 1;
  std::optional<std::filesystem::path> counterexample_dir;
};

struct Mismatch {
  int id;
  std::uint64_t seed;
  std::string message;
  TreeInstance minimized;
  std::optional<std::filesystem::path> file;
};

struct CheckSummary {
  int checked = 0;
  std::vector<Mismatch> mismatches;  // ordered by instance id
};

/// Generator seed of instance `id` in a sweep: seed * 1000003 + id.
std::uint64_t instance_seed(std::uint64_t seed, int id);

/// Instance `id` uses instance_seed(config.seed, id) and n uniform in [1, max_n].
TreeInstance check_instance(const CheckConfig& config, int id);

CheckSummary run_check(const CheckConfig& config);

}  // namespace ditree
