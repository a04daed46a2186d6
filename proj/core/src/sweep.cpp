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

#include "ceq/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "ceq/entropy.hpp"
#include "ceq/equilibria.hpp"
#include "ceq/lp.hpp"

namespace ceq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  const auto elapsed = Clock::now() - start;
  const double s =
      std::chrono::duration_cast<std::chrono::duration<double>>(elapsed)
          .count();
  return std::max(s, 1e-9);  // clock granularity floor; times stay positive
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, end);
}

void append_actions(std::string& out, const std::vector<int>& action_counts) {
  for (std::size_t i = 0; i < action_counts.size(); ++i) {
    if (i > 0) out += 'x';
    out += std::to_string(action_counts[i]);
  }
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of nothing");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

double time_lp_feasibility(const NormalFormGame& game) {
  const auto start = Clock::now();
  const LinearProgram lp = build_ce_polytope(game);
  const SolveOutcome outcome = feasible_point(lp);
  const double elapsed = seconds_since(start);
  if (outcome.status != SolveStatus::kFeasible) {
    throw std::runtime_error("LP feasibility failed with status " +
                             to_string(outcome.status));
  }
  return elapsed;
}

}  // namespace

std::vector<double> default_lambda_sweep() {
  return {0.1, 10.0, 30.0, 100.0, 1000.0, 1e4};
}

std::vector<std::vector<int>> default_sweep_sizes() {
  return {{2, 2}, {5, 5}, {10, 10}, {2, 2, 2}, {5, 5, 5}};
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  if (config.lambdas.empty()) {
    throw std::invalid_argument("sweep needs at least one lambda");
  }
  std::vector<SweepRecord> records;
  const RngSpec rng{config.seed};

  std::vector<NormalFormGame> games;
  if (config.fixture_games.empty()) {
    if (config.games_per_size < 1) {
      throw std::invalid_argument("sweep needs at least one game per size");
    }
    std::int64_t game_id = 0;
    for (const std::vector<int>& size : config.sizes) {
      for (int g = 0; g < config.games_per_size; ++g, ++game_id) {
        auto engine = rng.engine(static_cast<std::uint64_t>(game_id));
        games.push_back(gen_random_game(size, engine));
      }
    }
  } else {
    games = config.fixture_games;
  }

  records.reserve(games.size() * config.lambdas.size());
  for (std::size_t g = 0; g < games.size(); ++g) {
    const NormalFormGame& game = games[g];
    std::optional<double> lp_time;
    if (config.time_lp) lp_time = time_lp_feasibility(game);
    for (double lambda : config.lambdas) {
      const auto weights =
          RegularizationWeights::uniform(game.num_players(), lambda);
      const auto start = Clock::now();
      const EntropySolution solution = solve_closed_form(game, weights);
      const double closed_form_time = seconds_since(start);

      const EpsilonCertificate cert =
          epsilon_certificate(solution.log_decomposition, weights);
      double bound_sum = 0.0;
      for (double b : cert.bounds) bound_sum += b;

      SweepRecord record;
      record.game_id = static_cast<std::int64_t>(g);
      record.seed = config.seed;
      record.num_players = game.num_players();
      record.action_counts = game.action_counts();
      record.lambda = lambda;
      record.eps_empirical = empirical_suboptimality(game, solution.y);
      record.eps_bound = cert.max_bound;
      record.eps_bound_player_mean =
          bound_sum / static_cast<double>(game.num_players());
      record.t_closed_form_s = closed_form_time;
      record.t_lp_s = lp_time;
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::string sweep_csv(std::span<const SweepRecord> records) {
  std::string csv =
      "game_id,seed,n_players,actions,lambda,eps_empirical,eps_bound,"
      "t_closed_form_s,t_lp_s\n";
  for (const SweepRecord& r : records) {
    csv += std::to_string(r.game_id);
    csv += ',';
    csv += std::to_string(r.seed);
    csv += ',';
    csv += std::to_string(r.num_players);
    csv += ',';
    append_actions(csv, r.action_counts);
    csv += ',';
    append_double(csv, r.lambda);
    csv += ',';
    append_double(csv, r.eps_empirical);
    csv += ',';
    append_double(csv, r.eps_bound);
    csv += ',';
    append_double(csv, r.t_closed_form_s);
    csv += ',';
    if (r.t_lp_s) append_double(csv, *r.t_lp_s);
    csv += '\n';
  }
  return csv;
}

std::vector<SweepSummary> summarize_sweep(
    std::span<const SweepRecord> records) {
  std::vector<SweepSummary> rows;
  for (const SweepRecord& r : records) {
    SweepSummary* row = nullptr;
    for (SweepSummary& candidate : rows) {
      if (candidate.lambda == r.lambda) {
        row = &candidate;
        break;
      }
    }
    if (row == nullptr) {
      rows.push_back(SweepSummary{r.lambda, 0, 0.0, 0.0, 0.0, 0.0});
      row = &rows.back();
    }
    ++row->records;
    row->eps_empirical_mean += r.eps_empirical;
    row->eps_bound_max_mean += r.eps_bound;
    row->eps_bound_player_mean += r.eps_bound_player_mean;
  }
  for (SweepSummary& row : rows) {
    const double n = static_cast<double>(row.records);
    row.eps_empirical_mean /= n;
    row.eps_bound_max_mean /= n;
    row.eps_bound_player_mean /= n;
  }
  for (SweepSummary& row : rows) {
    if (row.records < 2) continue;
    double sum_sq = 0.0;
    for (const SweepRecord& r : records) {
      if (r.lambda != row.lambda) continue;
      const double d = r.eps_empirical - row.eps_empirical_mean;
      sum_sq += d * d;
    }
    row.eps_empirical_std =
        std::sqrt(sum_sq / static_cast<double>(row.records - 1));
  }
  return rows;
}

std::string summary_csv(std::span<const SweepSummary> rows) {
  std::string csv =
      "lambda,records,eps_empirical_mean,eps_empirical_std,eps_bound_max_mean,"
      "eps_bound_player_mean\n";
  for (const SweepSummary& row : rows) {
    append_double(csv, row.lambda);
    csv += ',';
    csv += std::to_string(row.records);
    csv += ',';
    append_double(csv, row.eps_empirical_mean);
    csv += ',';
    append_double(csv, row.eps_empirical_std);
    csv += ',';
    append_double(csv, row.eps_bound_max_mean);
    csv += ',';
    append_double(csv, row.eps_bound_player_mean);
    csv += '\n';
  }
  return csv;
}

std::vector<TimingRecord> bench_timing(const TimingConfig& config) {
  if (config.reps < 1) throw std::invalid_argument("need at least one rep");
  if (config.games_per_size < 1) {
    throw std::invalid_argument("need at least one game per size");
  }
  std::vector<TimingRecord> records;
  const RngSpec rng{config.seed};
  std::uint64_t stream = 0;
  for (const std::vector<int>& size : config.sizes) {
    std::vector<double> closed_form_times;
    std::vector<double> lp_times;
    for (int g = 0; g < config.games_per_size; ++g, ++stream) {
      auto engine = rng.engine(stream);
      const NormalFormGame game = gen_random_game(size, engine);
      const auto weights =
          RegularizationWeights::uniform(game.num_players(), config.lambda);
      // Warm up once so neither side pays first-touch costs.
      (void)solve_closed_form(game, weights);
      for (int rep = 0; rep < config.reps; ++rep) {
        const auto start = Clock::now();
        (void)solve_closed_form(game, weights);
        closed_form_times.push_back(seconds_since(start));
        lp_times.push_back(time_lp_feasibility(game));
      }
    }
    TimingRecord record;
    record.num_players = static_cast<int>(size.size());
    record.action_counts = size;
    record.t_closed_form_s = median(std::move(closed_form_times));
    record.t_lp_s = median(std::move(lp_times));
    record.ratio = record.t_lp_s / record.t_closed_form_s;
    records.push_back(std::move(record));
  }
  return records;
}

std::string timing_csv(std::span<const TimingRecord> records) {
  std::string csv = "n_players,actions,t_closed_form_s,t_lp_s,ratio\n";
  for (const TimingRecord& r : records) {
    csv += std::to_string(r.num_players);
    csv += ',';
    append_actions(csv, r.action_counts);
    csv += ',';
    append_double(csv, r.t_closed_form_s);
    csv += ',';
    append_double(csv, r.t_lp_s);
    csv += ',';
    append_double(csv, r.ratio);
    csv += '\n';
  }
  return csv;
}

}  // namespace ceq
