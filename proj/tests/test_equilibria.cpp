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

#include "json.hpp"

#include "ceq/entropy.hpp"
#include "ceq/equilibria.hpp"
#include "ceq/game.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ceq;
using namespace ceq_test;

namespace {

// Frozen from the extended-precision oracle; asserted against it below too.
constexpr double kGStarEntropyEps = 0.3378347121470412;

}  // namespace

TEST_CASE("the fixture mixed strategy (1/2,1/2) is a Nash equilibrium") {
  const NormalFormGame g = g_star();
  const DeviationReport report =
      check_nash(g, JointStrategy({{0.5, 0.5}, {0.5, 0.5}}));
  CHECK(report.entries.size() == 4);
  CHECK(report.max_violation == 0.0);
  CHECK(report.holds());
}

TEST_CASE("a profitable pure deviation is found and valued") {
  const NormalFormGame g = g_star();
  // Row 1, column 0: the column player gains exactly 1 by switching columns.
  const DeviationReport report =
      check_nash(g, pure_joint_strategy({2, 2}, {1, 0}));
  CHECK(report.max_violation == doctest::Approx(1.0));
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->player == 1);
  CHECK(report.witness->to_action == 1);
  CHECK_FALSE(report.holds());
}

TEST_CASE("single-action players admit no deviations") {
  const NormalFormGame g = constant_cost_game({1, 1}, {3.0, -2.0});
  const DeviationReport report =
      check_nash(g, JointStrategy(std::vector<std::vector<double>>{{1.0}, {1.0}}));
  CHECK(report.entries.empty());
  CHECK(report.max_violation == 0.0);
  CHECK_FALSE(report.witness.has_value());
  CHECK(report.holds());

  const DeviationReport ce = check_ce(g, point_mass(1, 0));
  CHECK(ce.entries.empty());
  CHECK(ce.max_violation == 0.0);
}

TEST_CASE("uniform strategy on the fixture satisfies every CE condition") {
  const NormalFormGame g = g_star();
  const DeviationReport report = check_ce(g, uniform_strategy(4));
  REQUIRE(report.entries.size() == 4);
  for (const DeviationEntry& e : report.entries) CHECK(e.value == 0.0);
  CHECK(report.max_violation == 0.0);
  CHECK(report.holds());
}

TEST_CASE("point mass on a non-equilibrium joint action violates CE") {
  const NormalFormGame g = g_star();
  const DeviationReport report = check_ce(g, point_mass(4, 2));
  CHECK(report.max_violation == doctest::Approx(1.0));
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->player == 1);
  CHECK(report.witness->from_action == 0);
  CHECK(report.witness->to_action == 1);
}

TEST_CASE("check_ce agrees with the definition-level oracle") {
  std::mt19937_64 engine(41);
  for (const std::vector<int>& counts :
       {std::vector<int>{2, 2}, {3, 3}, {2, 3, 2}}) {
    for (int round = 0; round < 20; ++round) {
      const NormalFormGame g = random_game(counts, engine);
      const CorrelatedStrategy y = CorrelatedStrategy(
          random_simplex(static_cast<int>(g.num_joint_actions()), engine));
      const DeviationReport report = check_ce(g, y);
      const auto oracle = oracle_ce_entries(g, y.probs());
      REQUIRE(report.entries.size() == oracle.size());
      for (std::size_t k = 0; k < oracle.size(); ++k) {
        CHECK(report.entries[k].player == oracle[k].player);
        CHECK(report.entries[k].from_action == oracle[k].from_action);
        CHECK(report.entries[k].to_action == oracle[k].to_action);
        CHECK(std::abs(report.entries[k].value -
                       static_cast<double>(oracle[k].value)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("the induced strategy of the mixed equilibrium passes check_ce") {
  const NormalFormGame g = g_star();
  const JointStrategy x({{0.5, 0.5}, {0.5, 0.5}});
  REQUIRE(check_nash(g, x).holds());
  CHECK(check_ce(g, induce_correlated(g, x)).holds());
}

TEST_CASE("NE and CE verdicts agree on induced strategies") {
  std::mt19937_64 engine(43);
  int nash_count = 0;
  for (const std::vector<int>& counts :
       {std::vector<int>{2, 2}, {3, 3}, {2, 3}, {2, 2, 2}}) {
    for (int round = 0; round < 300; ++round) {
      const NormalFormGame g = random_game(counts, engine);
      JointStrategy x = random_joint_strategy(counts, engine);
      if (round % 3 == 0) {
        // Vertices too: pure joint strategies.
        std::vector<int> actions;
        for (int c : counts) {
          actions.push_back(static_cast<int>(engine() % c));
        }
        x = pure_joint_strategy(counts, actions);
      }
      const bool is_nash = check_nash(g, x).within(1e-8);
      const bool is_ce = check_ce(g, induce_correlated(g, x)).within(1e-8);
      CHECK(is_nash == is_ce);
      nash_count += is_nash ? 1 : 0;
    }
  }
  CHECK(nash_count > 0);  // some pure equilibria must have been sampled
}

TEST_CASE("point-mass CE check reduces to pure deviation gains") {
  std::mt19937_64 engine(47);
  for (int round = 0; round < 25; ++round) {
    const NormalFormGame g = random_game({3, 2, 2}, engine);
    for (std::int64_t flat = 0; flat < g.num_joint_actions(); ++flat) {
      const std::vector<int> tuple = g.joint_tuple(flat);
      double best_gain = 0.0;  // zero rows exist since every A_i >= 2
      for (int i = 0; i < g.num_players(); ++i) {
        for (int b = 0; b < g.action_count(i); ++b) {
          if (b == tuple[i]) continue;
          std::vector<int> swapped = tuple;
          swapped[i] = b;
          best_gain = std::max(
              best_gain, g.cost(i, flat) - g.cost(i, g.joint_index(swapped)));
        }
      }
      const DeviationReport report =
          check_ce(g, point_mass(g.num_joint_actions(), flat));
      CHECK(report.max_violation == doctest::Approx(best_gain));

      // Pure CE and pure NE verdicts coincide.
      const DeviationReport nash =
          check_nash(g, pure_joint_strategy(g.action_counts(), tuple));
      CHECK(report.within(1e-8) == nash.within(1e-8));
    }
  }
}

TEST_CASE("players with a single action contribute no entries") {
  // One fixed player, one with three actions: only the latter deviates.
  const NormalFormGame g({1, 3}, {{1, 2, 3}, {5, 1, 3}});
  const DeviationReport report = check_ce(g, point_mass(3, 1));
  CHECK(report.entries.size() == 6);
  for (const DeviationEntry& e : report.entries) CHECK(e.player == 1);
  CHECK(report.max_violation == 0.0);  // action 1 is the column optimum
  const DeviationReport moved = check_ce(g, point_mass(3, 0));
  CHECK(moved.max_violation == doctest::Approx(4.0));  // 5 -> 1
}

TEST_CASE("strictly slack conditions yield a negative maximum") {
  // Interior point of a coordination game: every swap strictly hurts.
  const NormalFormGame g = coordination_game();
  const CorrelatedStrategy y({0.45, 0.05, 0.05, 0.45});
  const DeviationReport report = check_ce(g, y);
  CHECK(report.max_violation == doctest::Approx(-4.0));
  CHECK(empirical_suboptimality(g, y) == report.max_violation);
  CHECK(report.holds());
}

TEST_CASE("empirical suboptimality equals the max CE entry bit for bit") {
  std::mt19937_64 engine(53);
  const NormalFormGame g = random_game({3, 3}, engine);
  const CorrelatedStrategy y(random_simplex(9, engine));
  CHECK(empirical_suboptimality(g, y) == check_ce(g, y).max_violation);
}

TEST_CASE("empirical suboptimality fixture values") {
  const NormalFormGame g = g_star();
  CHECK(empirical_suboptimality(g, uniform_strategy(4)) == 0.0);
  CHECK(empirical_suboptimality(g, point_mass(4, 2)) == doctest::Approx(1.0));

  const EntropySolution solution =
      solve_closed_form(g, RegularizationWeights::uniform(2, 1.0));
  const double eps = empirical_suboptimality(g, solution.y);
  CHECK(std::abs(eps - kGStarEntropyEps) <= 1e-12);
  // Against the extended-precision oracle as well.
  CHECK(std::abs(eps - static_cast<double>(
                           oracle_max_violation(g, solution.y.probs()))) <=
        1e-12);
}

TEST_CASE("fully mixed stationarity certifies constant-cost games only") {
  const Decomposition uniform4 = uniform_decomposition(2, 4);

  const NormalFormGame constant = constant_cost_game({2, 2}, {3.5, -2.0});
  const StationarityReport good =
      check_fully_mixed_gne(constant, uniform4, 1e-10);
  CHECK(good.certified);
  CHECK(good.max_residual == 0.0);
  CHECK(good.multipliers[0] == doctest::Approx(3.5));
  CHECK(good.multipliers[1] == doctest::Approx(-2.0));
  // The certified product is a correlated equilibrium.
  CHECK(check_ce(constant, product_strategy(uniform4)).max_violation <=
        4 * 1e-10 * 3.5);

  const NormalFormGame g = g_star();
  const StationarityReport bad = check_fully_mixed_gne(g, uniform4);
  CHECK_FALSE(bad.certified);
  CHECK(bad.multipliers[0] == doctest::Approx(3.0));
  CHECK(bad.residuals[0] == doctest::Approx(1.0));
  CHECK(bad.residuals[1] == doctest::Approx(1.0));

  const NormalFormGame zero = zero_cost_game({2, 2});
  const StationarityReport zero_report =
      check_fully_mixed_gne(zero, uniform4, 1e-10);
  CHECK(zero_report.certified);
  CHECK(zero_report.multipliers[0] == 0.0);
}

TEST_CASE("fully mixed precondition names the offending entry") {
  const NormalFormGame g = g_star();
  std::vector<std::vector<double>> measures{{1, 1, 1, 1}, {1, 1, 0, 1}};
  CHECK_THROWS_WITH_AS(
      check_fully_mixed_gne(g, Decomposition(measures)),
      doctest::Contains("measure 1 is zero at joint action 2"),
      std::invalid_argument);
}

TEST_CASE("regularized stationarity of the closed form is tiny") {
  const NormalFormGame g = g_star();
  const auto lambda = RegularizationWeights::uniform(2, 1.0);
  const EntropySolution solution = solve_closed_form(g, lambda);

  const StationarityReport log_report =
      check_regularized_stationarity(g, solution.log_decomposition, lambda);
  CHECK(log_report.max_residual <= 1e-10);
  CHECK(log_report.certified);

  // Linear-domain route agrees at this moderate lambda.
  const StationarityReport linear_report = check_regularized_stationarity(
      g, solution.log_decomposition.to_linear(), lambda);
  CHECK(linear_report.max_residual <= 1e-10);
}

TEST_CASE("regularized stationarity on symmetric zero-cost measures") {
  const NormalFormGame zero = zero_cost_game({2, 2});
  const auto lambda = RegularizationWeights::uniform(2, 1.0);
  // alpha_i = A^(-lambda_i / total) = 1/2 per entry.
  const Decomposition d(
      std::vector<std::vector<double>>(2, std::vector<double>(4, 0.5)));
  const StationarityReport report =
      check_regularized_stationarity(zero, d, lambda);
  CHECK(report.max_residual == 0.0);
  CHECK(report.certified);
}

TEST_CASE("uniform decomposition on the fixture is not stationary") {
  const NormalFormGame g = g_star();
  const auto lambda = RegularizationWeights::uniform(2, 1.0);
  const StationarityReport report =
      check_regularized_stationarity(g, uniform_decomposition(2, 4), lambda);
  CHECK(report.max_residual == doctest::Approx(1.0));
  CHECK_FALSE(report.certified);
}

TEST_CASE("regularized stationarity rejects zero measures") {
  const NormalFormGame g = g_star();
  const auto lambda = RegularizationWeights::uniform(2, 1.0);
  const Decomposition d({{1, 1, 1, 1}, {1, 0, 1, 1}});
  CHECK_THROWS_AS(check_regularized_stationarity(g, d, lambda),
                  std::invalid_argument);
}

TEST_CASE("deviation values depend only on the product of a decomposition") {
  std::mt19937_64 engine(59);
  for (int round = 0; round < 20; ++round) {
    const NormalFormGame g = random_game({2, 2, 2}, engine);
    std::vector<double> y = random_simplex(8, engine);
    const Decomposition d({y, std::vector<double>(8, 1.0),
                           std::vector<double>(8, 1.0)});
    const Decomposition rescaled =
        rescale_pair(rescale_pair(d, 0, 1, 512.0), 1, 2, 0.03125);
    const DeviationReport before = check_ce(g, normalize_to_strategy(product(d)));
    const DeviationReport after =
        check_ce(g, normalize_to_strategy(product(rescaled)));
    for (std::size_t k = 0; k < before.entries.size(); ++k) {
      CHECK(std::abs(before.entries[k].value - after.entries[k].value) <=
            1e-9 * std::max(1.0, std::abs(before.entries[k].value)));
    }
  }
}

TEST_CASE("per-player cost shifts leave that player's CE entries unchanged") {
  // Integer costs and integer shift: differences are exact.
  const NormalFormGame g = g_star();
  std::vector<std::vector<double>> shifted_costs{g.costs(0), g.costs(1)};
  for (double& c : shifted_costs[0]) c += 5.0;
  const NormalFormGame shifted({2, 2}, std::move(shifted_costs));

  std::mt19937_64 engine(61);
  for (int round = 0; round < 10; ++round) {
    const CorrelatedStrategy y(random_simplex(4, engine));
    const DeviationReport base = check_ce(g, y);
    const DeviationReport moved = check_ce(shifted, y);
    for (std::size_t k = 0; k < base.entries.size(); ++k) {
      CHECK(base.entries[k].value == moved.entries[k].value);
    }
  }

  // Random costs and a fractional shift stay within rounding.
  const NormalFormGame h = random_game({3, 3}, engine);
  std::vector<std::vector<double>> nudged{h.costs(0), h.costs(1)};
  for (double& c : nudged[1]) c += 0.7368429;
  const NormalFormGame h_shifted({3, 3}, std::move(nudged));
  for (int round = 0; round < 10; ++round) {
    const CorrelatedStrategy y(random_simplex(9, engine));
    const DeviationReport base = check_ce(h, y);
    const DeviationReport moved = check_ce(h_shifted, y);
    for (std::size_t k = 0; k < base.entries.size(); ++k) {
      CHECK(std::abs(base.entries[k].value - moved.entries[k].value) <= 1e-12);
    }
  }
}

TEST_CASE("deviation report serializes to the documented JSON shape") {
  const NormalFormGame g = g_star();
  const DeviationReport report = check_ce(g, point_mass(4, 2));

  const auto compact = nlohmann::json::parse(to_json(report));
  CHECK(compact.contains("max_violation"));
  CHECK(compact["witness"]["player"] == 1);
  CHECK_FALSE(compact.contains("entries"));

  const auto verbose = nlohmann::json::parse(to_json(report, true));
  REQUIRE(verbose.contains("entries"));
  CHECK(verbose["entries"].size() == 4);

  const DeviationReport empty = check_nash(
      constant_cost_game({1, 1}, {0, 0}), JointStrategy(std::vector<std::vector<double>>{{1.0}, {1.0}}));
  const auto none = nlohmann::json::parse(to_json(empty));
  CHECK(none["witness"].is_null());

  const StationarityReport st = check_fully_mixed_gne(
      constant_cost_game({2, 2}, {1.0, 1.0}), uniform_decomposition(2, 4));
  const auto stj = nlohmann::json::parse(to_json(st));
  CHECK(stj["certified"] == true);
  CHECK(stj["multipliers"].size() == 2);
}
