#include "ditree/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ditree/cit.hpp"
#include "ditree/dit.hpp"
#include "ditree/greedy.hpp"
#include "ditree/mcdit.hpp"
#include "ditree/parallel.hpp"

namespace ditree {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kN1: return "n1";
    case Algorithm::kCit: return "cit";
    case Algorithm::kDit: return "dit";
    case Algorithm::kMcdit: return "mcdit";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kN1, Algorithm::kCit, Algorithm::kDit, Algorithm::kMcdit}) {
    if (name == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm: " + name);
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.reps < 1) throw std::invalid_argument("run_bench: reps must be at least 1");
  BenchReport report{config.seed, {}};

  struct Job {
    Algorithm algorithm;
    int n;
    int rep;
    double seconds = 0.0;
    bool optimal = true;
  };
  std::vector<Job> jobs;
  for (Algorithm a : config.algorithms) {
    for (int n : config.sizes) {
      for (int rep = 0; rep < config.reps; ++rep) jobs.push_back({a, n, rep});
    }
  }

  parallel_for(static_cast<int>(jobs.size()), config.workers, [&](int index) {
    Job& job = jobs[index];
    InstanceFamily family = config.family;
    family.n = job.n;
    family.seed = config.seed * 1000003ULL + static_cast<std::uint64_t>(job.n) * 1009ULL + job.rep;
    TreeInstance inst = gen_instance(family);
    if (job.algorithm == Algorithm::kN1) inst = unit_hamming_variant(inst);

    auto start = std::chrono::steady_clock::now();
    switch (job.algorithm) {
      case Algorithm::kN1: job.optimal = solve_dit_n1(inst).feasible(); break;
      case Algorithm::kCit: solve_cit(inst, inst.params().K, inst.params().N, config.cit_lambda); break;
      case Algorithm::kDit: job.optimal = solve_dit(inst).feasible(); break;
      case Algorithm::kMcdit: job.optimal = solve_mcdit(inst).feasible(); break;
    }
    job.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });

  for (Algorithm a : config.algorithms) {
    for (int n : config.sizes) {
      std::vector<double> times;
      BenchRow row{a, n, 0, 0, 0, 0, config.reps, 0, 0};
      for (const Job& job : jobs) {
        if (job.algorithm != a || job.n != n) continue;
        times.push_back(job.seconds);
        (job.optimal ? row.optimal : row.infeasible) += 1;
      }
      std::sort(times.begin(), times.end());
      row.min = times.front();
      row.max = times.back();
      row.mean = std::accumulate(times.begin(), times.end(), 0.0) / times.size();
      row.median = times.size() % 2 ? times[times.size() / 2]
                                     : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
      report.rows.push_back(row);
    }
  }
  return report;
}

std::string bench_tsv(const BenchReport& report) {
  std::ostringstream out;
  out.precision(6);
  out << "algorithm\tn\tmean\tmax\tmin\treps\n";
  for (const BenchRow& row : report.rows) {
    out << to_string(row.algorithm) << '\t' << row.n << '\t' << row.mean << '\t' << row.max << '\t' << row.min
        << '\t' << row.reps << '\n';
  }
  return out.str();
}

nlohmann::json bench_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    rows.push_back({{"algorithm", to_string(row.algorithm)},
                    {"n", row.n},
                    {"mean", row.mean},
                    {"max", row.max},
                    {"min", row.min},
                    {"median", row.median},
                    {"reps", row.reps},
                    {"optimal", row.optimal},
                    {"infeasible", row.infeasible}});
  }
  return {{"seed", report.seed}, {"rows", std::move(rows)}};
}

}  // namespace ditree
