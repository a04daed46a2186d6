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

#include <vector>

#include "benchmark/benchmark.h"

#include "ceq/entropy.hpp"
#include "ceq/equilibria.hpp"
#include "ceq/lp.hpp"
#include "ceq/random_game.hpp"

namespace {

std::vector<int> size_for(int players, int actions) {
  return std::vector<int>(players, actions);
}

ceq::NormalFormGame make_game(int players, int actions) {
  auto engine = ceq::RngSpec{12345}.engine(
      static_cast<std::uint64_t>(players * 100 + actions));
  return ceq::gen_random_game(size_for(players, actions), engine);
}

void BM_SolveClosedForm(benchmark::State& state) {
  const ceq::NormalFormGame game =
      make_game(static_cast<int>(state.range(0)),
                static_cast<int>(state.range(1)));
  const auto lambda =
      ceq::RegularizationWeights::uniform(game.num_players(), 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceq::solve_closed_form(game, lambda));
  }
  state.SetItemsProcessed(state.iterations() * game.num_joint_actions());
}

void BM_LpFeasiblePoint(benchmark::State& state) {
  const ceq::NormalFormGame game =
      make_game(static_cast<int>(state.range(0)),
                static_cast<int>(state.range(1)));
  for (auto _ : state) {
    const ceq::LinearProgram lp = ceq::build_ce_polytope(game);
    benchmark::DoNotOptimize(ceq::feasible_point(lp));
  }
}

void BM_CheckCe(benchmark::State& state) {
  const ceq::NormalFormGame game =
      make_game(static_cast<int>(state.range(0)),
                static_cast<int>(state.range(1)));
  const auto lambda =
      ceq::RegularizationWeights::uniform(game.num_players(), 10.0);
  const ceq::EntropySolution solution = ceq::solve_closed_form(game, lambda);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceq::check_ce(game, solution.y));
  }
}

}  // namespace

BENCHMARK(BM_SolveClosedForm)
    ->Args({2, 2})
    ->Args({2, 5})
    ->Args({2, 10})
    ->Args({3, 3})
    ->Args({3, 5})
    ->Args({3, 10});

BENCHMARK(BM_LpFeasiblePoint)
    ->Args({2, 2})
    ->Args({2, 5})
    ->Args({2, 10})
    ->Args({3, 3})
    ->Args({3, 5});

BENCHMARK(BM_CheckCe)->Args({2, 5})->Args({2, 10})->Args({3, 5});

BENCHMARK_MAIN();
