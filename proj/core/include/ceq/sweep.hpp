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

#ifndef CEQ_SWEEP_HPP_
#define CEQ_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ceq/game.hpp"
#include "ceq/random_game.hpp"

namespace ceq {

/// The regularization magnitudes swept by default.
std::vector<double> default_lambda_sweep();

/// Desk-scale default sizes: two players with 2/5/10 actions, three players
/// with 2/5 actions.
std::vector<std::vector<int>> default_sweep_sizes();

struct SweepConfig {
  int games_per_size = 100;
  std::vector<std::vector<int>> sizes = default_sweep_sizes();
  std::vector<double> lambdas = default_lambda_sweep();
  std::uint64_t seed = 0;
  bool time_lp = false;
  /// When nonempty these games are swept instead of random ones.
  std::vector<NormalFormGame> fixture_games;
};

struct SweepRecord {
  std::int64_t game_id = 0;
  std::uint64_t seed = 0;  // base seed; (seed, game_id) regenerates the game
  int num_players = 0;
  std::vector<int> action_counts;
  double lambda = 0.0;
  double eps_empirical = 0.0;
  double eps_bound = 0.0;             // max over players
  double eps_bound_player_mean = 0.0; // mean over players (summary only)
  double t_closed_form_s = 0.0;
  std::optional<double> t_lp_s;
};

/// Solves every game x lambda pair in closed form and certifies it. Record
/// order is deterministic: sizes in config order, games ascending, lambdas in
/// config order. All closed-form records satisfy
/// eps_empirical <= eps_bound + 1e-8.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// CSV with header
/// game_id,seed,n_players,actions,lambda,eps_empirical,eps_bound,
/// t_closed_form_s,t_lp_s. Actions are joined with 'x'; an absent LP time is
/// an empty cell. Identical records serialize byte-identically.
std::string sweep_csv(std::span<const SweepRecord> records);

struct SweepSummary {
  double lambda = 0.0;
  std::int64_t records = 0;
  double eps_empirical_mean = 0.0;
  double eps_empirical_std = 0.0;  // sample standard deviation
  double eps_bound_max_mean = 0.0;
  double eps_bound_player_mean = 0.0;
};

/// Per-lambda aggregates across all records, in first-seen lambda order.
std::vector<SweepSummary> summarize_sweep(std::span<const SweepRecord> records);
std::string summary_csv(std::span<const SweepSummary> rows);

struct TimingConfig {
  std::vector<std::vector<int>> sizes = default_sweep_sizes();
  int reps = 5;
  int games_per_size = 3;
  std::uint64_t seed = 0;
  double lambda = 1.0;
};

struct TimingRecord {
  int num_players = 0;
  std::vector<int> action_counts;
  double t_closed_form_s = 0.0;  // median over games x reps
  double t_lp_s = 0.0;           // median over games x reps, build + solve
  double ratio = 0.0;            // t_lp_s / t_closed_form_s
};

/// Times the closed form against LP feasibility on the same games; runs
/// strictly sequentially.
std::vector<TimingRecord> bench_timing(const TimingConfig& config);
std::string timing_csv(std::span<const TimingRecord> records);

}  // namespace ceq

#endif  // CEQ_SWEEP_HPP_
