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

#ifndef CEQ_TESTS_SUPPORT_FIXTURES_HPP_
#define CEQ_TESTS_SUPPORT_FIXTURES_HPP_

#include <cmath>
#include <random>
#include <vector>

#include "ceq/game.hpp"

namespace ceq_test {

// 2x2 bimatrix fixture. Row player costs [[3,3],[2,4]], column player costs
// [[1,2],[1,0]], flattened row-major. Its mixed Nash equilibrium is
// (1/2,1/2) for both players and the uniform distribution is its one
// correlated equilibrium.
inline ceq::NormalFormGame g_star() {
  return ceq::NormalFormGame({2, 2}, {{3, 3, 2, 4}, {1, 2, 1, 0}});
}

inline ceq::NormalFormGame zero_cost_game(std::vector<int> counts) {
  std::int64_t n = 1;
  for (int c : counts) n *= c;
  std::vector<std::vector<double>> costs(
      counts.size(), std::vector<double>(n, 0.0));
  return ceq::NormalFormGame(std::move(counts), std::move(costs));
}

inline ceq::NormalFormGame constant_cost_game(std::vector<int> counts,
                                              std::vector<double> values) {
  std::int64_t n = 1;
  for (int c : counts) n *= c;
  std::vector<std::vector<double>> costs;
  for (double v : values) costs.emplace_back(n, v);
  return ceq::NormalFormGame(std::move(counts), std::move(costs));
}

// Two-player coordination game with a fat CE polytope: matching is free,
// mismatching costs 10 for both players.
inline ceq::NormalFormGame coordination_game() {
  return ceq::NormalFormGame({2, 2}, {{0, 10, 10, 0}, {0, 10, 10, 0}});
}

inline double next_uniform_test(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

inline ceq::NormalFormGame random_game(std::vector<int> counts,
                                       std::mt19937_64& engine) {
  std::int64_t n = 1;
  for (int c : counts) n *= c;
  std::vector<std::vector<double>> costs(counts.size());
  for (auto& player_costs : costs) {
    player_costs.resize(n);
    for (double& c : player_costs) c = next_uniform_test(engine);
  }
  return ceq::NormalFormGame(std::move(counts), std::move(costs));
}

inline std::vector<double> random_simplex(int n, std::mt19937_64& engine) {
  std::vector<double> v(n);
  double total = 0.0;
  for (double& x : v) {
    x = -std::log(1.0 - next_uniform_test(engine));
    total += x;
  }
  for (double& x : v) x /= total;
  return v;
}

inline ceq::JointStrategy random_joint_strategy(
    const std::vector<int>& counts, std::mt19937_64& engine) {
  std::vector<std::vector<double>> probs;
  probs.reserve(counts.size());
  for (int c : counts) probs.push_back(random_simplex(c, engine));
  return ceq::JointStrategy(std::move(probs));
}

inline ceq::JointStrategy pure_joint_strategy(const std::vector<int>& counts,
                                              const std::vector<int>& actions) {
  std::vector<std::vector<double>> probs;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    std::vector<double> p(counts[i], 0.0);
    p[actions[i]] = 1.0;
    probs.push_back(std::move(p));
  }
  return ceq::JointStrategy(std::move(probs));
}

inline ceq::CorrelatedStrategy uniform_strategy(std::int64_t n) {
  return ceq::CorrelatedStrategy(
      std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

inline ceq::CorrelatedStrategy point_mass(std::int64_t n, std::int64_t at) {
  std::vector<double> y(n, 0.0);
  y[at] = 1.0;
  return ceq::CorrelatedStrategy(std::move(y));
}

// The uniform-product decomposition of the uniform strategy: every measure
// constant at (1/A)^(1/N).
inline ceq::Decomposition uniform_decomposition(int num_players,
                                                std::int64_t n) {
  const double value = std::pow(1.0 / static_cast<double>(n),
                                1.0 / static_cast<double>(num_players));
  return ceq::Decomposition(std::vector<std::vector<double>>(
      num_players, std::vector<double>(n, value)));
}

}  // namespace ceq_test

#endif  // CEQ_TESTS_SUPPORT_FIXTURES_HPP_
