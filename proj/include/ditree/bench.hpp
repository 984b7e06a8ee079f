#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ditree/generator.hpp"

namespace ditree {

enum class Algorithm { kN1, kCit, kDit, kMcdit };

const char* to_string(Algorithm a);
/// Throws std::invalid_argument for unknown names (n1, cit, dit, mcdit).
Algorithm parse_algorithm(const std::string& name);

struct BenchConfig {
  std::vector<int> sizes{10, 50, 100, 300, 500};
  std::vector<Algorithm> algorithms{Algorithm::kN1, Algorithm::kCit, Algorithm::kDit, Algorithm::kMcdit};
  int reps = 5;
  std::uint64_t seed = 1;
  InstanceFamily family;   // n and seed are overwritten per run
  double cit_lambda = 0.5;
  int workers = 1;
};

struct BenchRow {
  Algorithm algorithm;
  int n;
  double mean;
  double max;
  double min;
  double median;
  int reps;
  int optimal;
  int infeasible;
};

struct BenchReport {
  std::uint64_t seed;
  std::vector<BenchRow> rows;  // algorithm-major, sizes ascending
};

/// Times every algorithm on `reps` fresh instances per size. The single-edge
/// solver gets r = 1 and N = 1 variants of the same trees. Only the solve is
/// timed.
BenchReport run_bench(const BenchConfig& config);

/// Header: algorithm n mean max min reps
std::string bench_tsv(const BenchReport& report);
nlohmann::json bench_json(const BenchReport& report);

}  // namespace ditree
