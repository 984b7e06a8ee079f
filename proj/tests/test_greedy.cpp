#include <doctest.h>

#include <array>

#include "ditree/greedy.hpp"
#include "ditree/oracle.hpp"
#include "fixtures.hpp"

using namespace ditree;
using fixtures::kA;
using fixtures::kT;

namespace {

// Every r = 1, N = 1.
TreeInstance unit(double M) { return fixtures::three_edge(M, 4, 1, 0, 1); }

}  // namespace

TEST_CASE("one short leaf: upgrade the edge above it") {
  SolveReport r = solve_dit_n1(unit(4));
  REQUIRE(r.feasible());
  CHECK(r.plan.upgraded == std::vector<EdgeId>{kT});
  CHECK(r.objective == 10.0);
  CHECK(r.min_path == 5.0);
  CHECK(r.detail == "one short leaf");
}

TEST_CASE("M already met: largest increment, lowest index on ties") {
  SolveReport r = solve_dit_n1(unit(0));
  REQUIRE(r.feasible());
  CHECK(r.plan.upgraded == std::vector<EdgeId>{kA});
  CHECK(r.objective == 10.0);
  CHECK(r.detail == "M already met");
}

TEST_CASE("no slack on the shortest path") {
  SolveReport r = solve_dit_n1(unit(6));
  CHECK_FALSE(r.feasible());
  CHECK(r.detail == "no edge on the shortest path has enough slack");
  CHECK_FALSE(oracle_dit_single(unit(6)).best_value.has_value());
}

TEST_CASE("short leaves without a shared slack-sufficient edge") {
  const std::array<NodeId, 2> parents{0, 0};
  const std::array<double, 2> w{1, 1}, u{10, 10}, c{1, 1};
  const std::array<int, 2> r{1, 1};
  TreeInstance star = make_instance(parents, w, u, c, r, {5, 9, 1, 0});
  SolveReport rep = solve_dit_n1(star);
  CHECK_FALSE(rep.feasible());
  CHECK(rep.detail == "no single edge lifts every short leaf");
  CHECK_FALSE(oracle_dit_single(star).best_value.has_value());
}

TEST_CASE("several short leaves below one edge") {
  // 0 -> 1 (w 0, u 9), 1 -> 2 and 1 -> 3 (w 1, u 1), 0 -> 4 (w 7).
  const std::array<NodeId, 4> parents{0, 1, 1, 0};
  const std::array<double, 4> w{0, 1, 1, 7}, u{9, 1, 1, 7}, c{1, 1, 1, 1};
  const std::array<int, 4> r{1, 1, 1, 1};
  TreeInstance inst = make_instance(parents, w, u, c, r, {5, 9, 1, 0});
  SolveReport rep = solve_dit_n1(inst);
  REQUIRE(rep.feasible());
  CHECK(rep.plan.upgraded == std::vector<EdgeId>{1});
  CHECK(rep.detail == "several short leaves share an edge");
  CHECK(rep.objective == *oracle_dit_single(inst).best_value);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(solve_dit_n1(fixtures::three_edge(4, 4, 1)), std::invalid_argument);      // r(b) = 2
  CHECK_THROWS_AS(solve_dit_n1(fixtures::three_edge(4, 4, 2, 0, 1)), std::invalid_argument);  // N = 2
}
