// Copyright 2026 The ceq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "ceq/equilibria.hpp"
#include "ceq/lp.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ceq;
using namespace ceq_test;

namespace {

std::vector<double> total_cost_objective(const NormalFormGame& g) {
  std::vector<double> c(g.num_joint_actions(), 0.0);
  for (int i = 0; i < g.num_players(); ++i) {
    for (std::int64_t a = 0; a < g.num_joint_actions(); ++a) {
      c[a] += g.cost(i, a);
    }
  }
  return c;
}

}  // namespace

TEST_CASE("fixture polytope rows carry the pairwise cost differences") {
  const LinearProgram lp = build_ce_polytope(g_star());
  CHECK(lp.num_vars == 4);
  REQUIRE(lp.num_rows() == 4);
  // (player, from, to) ascending; entries are cost differences at the
  // from-action's columns.
  CHECK(lp.ineq_rows[0] == std::vector<double>{1, -1, 0, 0});   // p0 0->1
  CHECK(lp.ineq_rows[1] == std::vector<double>{0, 0, -1, 1});   // p0 1->0
  CHECK(lp.ineq_rows[2] == std::vector<double>{-1, 0, 1, 0});   // p1 0->1
  CHECK(lp.ineq_rows[3] == std::vector<double>{0, 1, 0, -1});   // p1 1->0
  for (double h : lp.ineq_rhs) CHECK(h == 0.0);
  CHECK(lp.row_labels[3].player == 1);
  CHECK(lp.row_labels[3].from_action == 1);
  CHECK(lp.row_labels[3].to_action == 0);
}

TEST_CASE("single-action players contribute no rows") {
  const LinearProgram lp =
      build_ce_polytope(constant_cost_game({1, 1}, {1.0, 2.0}));
  CHECK(lp.num_vars == 1);
  CHECK(lp.num_rows() == 0);
}

TEST_CASE("three 3-action players give 27 variables and 18 rows") {
  std::mt19937_64 engine(107);
  const LinearProgram lp = build_ce_polytope(random_game({3, 3, 3}, engine));
  CHECK(lp.num_vars == 27);
  CHECK(lp.num_rows() == 18);
}

TEST_CASE("polytope rows match a from-scratch construction") {
  std::mt19937_64 engine(109);
  const NormalFormGame g = random_game({2, 3}, engine);
  const LinearProgram lp = build_ce_polytope(g);
  std::size_t row = 0;
  for (int i = 0; i < g.num_players(); ++i) {
    for (int a = 0; a < g.action_count(i); ++a) {
      for (int b = 0; b < g.action_count(i); ++b) {
        if (b == a) continue;
        std::vector<double> expected(g.num_joint_actions(), 0.0);
        std::vector<int> tuple(g.num_players(), 0);
        do {
          if (tuple[i] != a) continue;
          std::vector<int> swapped = tuple;
          swapped[i] = b;
          const std::int64_t at = oracle_flat(g.action_counts(), tuple);
          expected[at] =
              g.cost(i, at) - g.cost(i, oracle_flat(g.action_counts(), swapped));
        } while (oracle_next_tuple(g.action_counts(), tuple));
        CHECK(lp.ineq_rows[row] == expected);
        ++row;
      }
    }
  }
  CHECK(row == static_cast<std::size_t>(lp.num_rows()));
}

TEST_CASE("row cap is enforced") {
  std::mt19937_64 engine(113);
  const NormalFormGame g = random_game({3, 3}, engine);  // needs 12 rows
  CHECK_THROWS_AS(build_ce_polytope(g, 11), std::invalid_argument);
  CHECK_NOTHROW(build_ce_polytope(g, 12));
}

TEST_CASE("feasible_point solves the fixture to its unique CE") {
  const LinearProgram lp = build_ce_polytope(g_star());
  const SolveOutcome outcome = feasible_point(lp);
  REQUIRE(outcome.status == SolveStatus::kFeasible);
  // The swap constraints of this game chain into equality: uniform is the
  // only correlated equilibrium.
  for (double v : outcome.y) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(outcome.residual <= 1e-8);
  CHECK(check_ce(g_star(), CorrelatedStrategy(outcome.y)).max_violation <=
        1e-8);
}

TEST_CASE("feasible_point on a bare simplex returns a coordinate vertex") {
  LinearProgram lp;
  lp.num_vars = 5;
  const SolveOutcome outcome = feasible_point(lp);
  REQUIRE(outcome.status == SolveStatus::kFeasible);
  CHECK(outcome.y == std::vector<double>{1, 0, 0, 0, 0});
}

TEST_CASE("feasible_point never fails on random games") {
  std::mt19937_64 engine(127);
  int solved = 0;
  for (int round = 0; round < 100; ++round) {
    std::vector<int> counts;
    if (round % 2 == 0) {
      counts = {2 + static_cast<int>(engine() % 4),
                2 + static_cast<int>(engine() % 4)};
    } else {
      counts = {3, 3, 3};
    }
    const NormalFormGame g = random_game(counts, engine);
    const SolveOutcome outcome = feasible_point(build_ce_polytope(g));
    REQUIRE(outcome.status == SolveStatus::kFeasible);
    CHECK(check_ce(g, CorrelatedStrategy(outcome.y)).max_violation <= 1e-7);
    ++solved;
  }
  CHECK(solved == 100);
}

TEST_CASE("minimize_linear matches the vertex-enumeration oracle") {
  const NormalFormGame g = g_star();
  LinearProgram lp = build_ce_polytope(g);
  lp.objective = total_cost_objective(g);  // [4, 5, 3, 4]
  CHECK(lp.objective == std::vector<double>{4, 5, 3, 4});

  const SolveOutcome outcome = minimize_linear(lp);
  REQUIRE(outcome.status == SolveStatus::kOptimal);
  CHECK(outcome.objective <= 4.0 + 1e-8);
  const double oracle = oracle_min_objective(lp);
  CHECK(std::abs(outcome.objective - oracle) <= 1e-8);
  CHECK(check_ce(g, CorrelatedStrategy(outcome.y)).max_violation <= 1e-8);
}

TEST_CASE("zero objective reduces to feasibility") {
  LinearProgram lp = build_ce_polytope(g_star());
  lp.objective.assign(4, 0.0);
  const SolveOutcome outcome = minimize_linear(lp);
  REQUIRE(outcome.status == SolveStatus::kOptimal);
  CHECK(outcome.objective == 0.0);
  CHECK(outcome.residual <= 1e-8);
}

TEST_CASE("mass avoids a penalized action on the bare simplex") {
  LinearProgram lp;
  lp.num_vars = 4;
  lp.objective = {1.0, 0.0, 0.0, 0.0};
  const SolveOutcome outcome = minimize_linear(lp);
  REQUIRE(outcome.status == SolveStatus::kOptimal);
  CHECK(outcome.objective == doctest::Approx(0.0));
  CHECK(outcome.y[0] == doctest::Approx(0.0));
}

TEST_CASE("minimize_linear beats rejection-sampled feasible points") {
  std::mt19937_64 engine(131);
  for (const NormalFormGame& g :
       {coordination_game(),
        NormalFormGame({2, 2}, {{1, 5, 5, 2}, {2, 5, 5, 1}})}) {
    LinearProgram lp = build_ce_polytope(g);
    lp.objective.resize(4);
    for (double& c : lp.objective) c = next_uniform_test(engine) - 0.5;
    const SolveOutcome outcome = minimize_linear(lp);
    REQUIRE(outcome.status == SolveStatus::kOptimal);

    int accepted = 0;
    std::int64_t draws = 0;
    while (accepted < 1000 && draws < 500'000) {
      ++draws;
      const std::vector<double> y = random_simplex(4, engine);
      bool feasible = true;
      for (std::int64_t r = 0; r < lp.num_rows() && feasible; ++r) {
        double lhs = 0.0;
        for (int j = 0; j < 4; ++j) lhs += lp.ineq_rows[r][j] * y[j];
        feasible = lhs <= 0.0;
      }
      if (!feasible) continue;
      ++accepted;
      double value = 0.0;
      for (int j = 0; j < 4; ++j) value += lp.objective[j] * y[j];
      CHECK(outcome.objective <= value + 1e-9);
    }
    CHECK(accepted == 1000);
  }
}

TEST_CASE("identical inputs give identical pivot sequences and outputs") {
  const LinearProgram lp = build_ce_polytope(g_star());
  SolveOptions opts;
  opts.trace = true;
  const SolveOutcome first = feasible_point(lp, opts);
  const SolveOutcome second = feasible_point(lp, opts);
  CHECK(first.pivot_trace == second.pivot_trace);
  CHECK(first.y == second.y);
  CHECK(first.pivots == second.pivots);

  LinearProgram objective_lp = lp;
  objective_lp.objective = {4, 5, 3, 4};
  const SolveOutcome third = minimize_linear(objective_lp, opts);
  const SolveOutcome fourth = minimize_linear(objective_lp, opts);
  CHECK(third.pivot_trace == fourth.pivot_trace);
  CHECK(third.y == fourth.y);
}

TEST_CASE("scaling one player's costs scales its rows, not the feasible set") {
  std::mt19937_64 engine(137);
  const NormalFormGame g = random_game({3, 3}, engine);
  for (double scale : {0.01, 100.0}) {
    std::vector<std::vector<double>> costs{g.costs(0), g.costs(1)};
    for (double& c : costs[0]) c *= scale;
    const NormalFormGame scaled({3, 3}, std::move(costs));

    const LinearProgram base = build_ce_polytope(g);
    const LinearProgram lp = build_ce_polytope(scaled);
    for (std::int64_t r = 0; r < lp.num_rows(); ++r) {
      const double factor = lp.row_labels[r].player == 0 ? scale : 1.0;
      for (std::int64_t j = 0; j < lp.num_vars; ++j) {
        CHECK(lp.ineq_rows[r][j] ==
              doctest::Approx(factor * base.ineq_rows[r][j]).epsilon(1e-12));
      }
    }

    const SolveOutcome outcome = feasible_point(lp);
    REQUIRE(outcome.status == SolveStatus::kFeasible);
    CHECK(check_ce(scaled, CorrelatedStrategy(outcome.y)).max_violation <=
          1e-8);
    // Same feasible set as the unscaled game, up to the row scaling.
    CHECK(check_ce(g, CorrelatedStrategy(outcome.y)).max_violation <=
          1e-8 * std::max(1.0, 1.0 / scale) * 1.01);
  }
}

TEST_CASE("iteration limit is reported") {
  const LinearProgram lp = build_ce_polytope(g_star());
  SolveOptions opts;
  opts.max_iterations = 1;
  CHECK(feasible_point(lp, opts).status == SolveStatus::kIterationLimit);
}

TEST_CASE("general inequality rows with positive rhs are honored") {
  LinearProgram lp;
  lp.num_vars = 3;
  lp.ineq_rows = {{1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}};
  lp.ineq_rhs = {0.3, -0.2};  // y0 <= 0.3 and y1 >= 0.2
  const SolveOutcome feasible = feasible_point(lp);
  REQUIRE(feasible.status == SolveStatus::kFeasible);
  CHECK(feasible.y[0] <= 0.3 + 1e-9);
  CHECK(feasible.y[1] >= 0.2 - 1e-9);

  lp.objective = {0.0, 0.0, 1.0};
  const SolveOutcome best = minimize_linear(lp);
  REQUIRE(best.status == SolveStatus::kOptimal);
  CHECK(best.objective == doctest::Approx(0.0));
}

TEST_CASE("an infeasible system is certified with a residual") {
  // y0 >= 0.5 and y0 <= 0.2 cannot hold together on the simplex.
  LinearProgram lp;
  lp.num_vars = 2;
  lp.ineq_rows = {{-1.0, 0.0}, {1.0, 0.0}};
  lp.ineq_rhs = {-0.5, 0.2};
  const SolveOutcome outcome = feasible_point(lp);
  CHECK(outcome.status == SolveStatus::kInfeasible);
  CHECK(outcome.residual >= 0.29);
  CHECK(outcome.y.empty());
}

TEST_CASE("LP validation rejects malformed programs") {
  LinearProgram lp;
  lp.num_vars = 0;
  CHECK_THROWS_AS(feasible_point(lp), std::invalid_argument);
  lp.num_vars = 2;
  lp.ineq_rows = {{1.0}};
  lp.ineq_rhs = {0.0};
  CHECK_THROWS_AS(feasible_point(lp), std::invalid_argument);
  lp.ineq_rows = {{1.0, 0.0}};
  CHECK_THROWS_AS(minimize_linear(lp), std::invalid_argument);  // no objective
}

TEST_CASE("plain-text export lists rows in construction order") {
  LinearProgram lp = build_ce_polytope(g_star());
  lp.objective = {4, 5, 3, 4};
  const std::string text = to_text(lp);
  CHECK(text.find("ceq-lp 1\n") == 0);
  CHECK(text.find("vars 4") != std::string::npos);
  CHECK(text.find("rows 4") != std::string::npos);
  CHECK(text.find("objective 4 5 3 4") != std::string::npos);
  CHECK(text.find("row 0 player 0 swap 0->1 : 1 -1 0 0 <= 0") !=
        std::string::npos);
  CHECK(text.find("row 3 player 1 swap 1->0 : 0 1 0 -1 <= 0") !=
        std::string::npos);
  CHECK(text.find("sum_to_one") != std::string::npos);
  CHECK(text.find("nonneg") != std::string::npos);

  std::ostringstream stream;
  write_lp(lp, stream);
  CHECK(stream.str() == text);
}
