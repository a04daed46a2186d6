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

#include "ceq/equilibria.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ceq {

namespace {

// Entries are laid out players ascending, from-action ascending, to-action
// ascending with the diagonal skipped. Returns the offset of player i's block.
std::vector<std::int64_t> player_entry_offsets(const NormalFormGame& game) {
  std::vector<std::int64_t> offsets(game.num_players() + 1, 0);
  for (int i = 0; i < game.num_players(); ++i) {
    const std::int64_t a = game.action_count(i);
    offsets[i + 1] = offsets[i] + a * (a - 1);
  }
  return offsets;
}

void finalize(DeviationReport& report) {
  report.max_violation = 0.0;
  report.witness.reset();
  for (const DeviationEntry& entry : report.entries) {
    if (!report.witness || entry.value > report.max_violation) {
      report.max_violation = entry.value;
      report.witness = entry;
    }
  }
  if (!report.witness) report.max_violation = 0.0;
}

void check_decomposition_shape(const NormalFormGame& game, int num_measures,
                               std::int64_t size) {
  if (num_measures != game.num_players()) {
    throw std::invalid_argument("decomposition needs one measure per player");
  }
  if (size != game.num_joint_actions()) {
    throw std::invalid_argument("measure length does not match game");
  }
}

// Stationarity of regularized costs cost_i(a) + log_measure_i(a) / lambda_i,
// with the log-measure supplied per (player, joint action).
StationarityReport regularized_stationarity(
    const NormalFormGame& game, const RegularizationWeights& lambda,
    const std::function<double(int, std::int64_t)>& log_measure, double tol) {
  if (lambda.num_players() != game.num_players()) {
    throw std::invalid_argument("need one regularization weight per player");
  }
  const std::int64_t num_actions = game.num_joint_actions();
  StationarityReport report;
  report.tol = tol;
  report.multipliers.resize(game.num_players());
  report.residuals.resize(game.num_players());
  std::vector<double> regularized(num_actions);
  for (int i = 0; i < game.num_players(); ++i) {
    const std::vector<double>& costs = game.costs(i);
    double mean = 0.0;
    for (std::int64_t a = 0; a < num_actions; ++a) {
      regularized[a] = costs[a] + log_measure(i, a) / lambda[i];
      mean += regularized[a];
    }
    mean /= static_cast<double>(num_actions);
    double residual = 0.0;
    for (std::int64_t a = 0; a < num_actions; ++a) {
      residual = std::max(residual, std::abs(regularized[a] - mean));
    }
    report.multipliers[i] = -mean;
    report.residuals[i] = residual;
    report.max_residual = std::max(report.max_residual, residual);
  }
  report.certified = report.max_residual <= tol;
  return report;
}

}  // namespace

DeviationReport check_nash(const NormalFormGame& game, const JointStrategy& x,
                           double tol) {
  if (x.num_players() != game.num_players()) {
    throw std::invalid_argument("strategy has wrong number of players");
  }
  DeviationReport report;
  report.tol = tol;
  const std::vector<std::int64_t> offsets = player_entry_offsets(game);
  report.entries.resize(offsets.back());
  for (int i = 0; i < game.num_players(); ++i) {
    const int num_actions = game.action_count(i);
    if (static_cast<int>(x.probs(i).size()) != num_actions) {
      throw std::invalid_argument("strategy of player " + std::to_string(i) +
                                  " does not match game");
    }
    std::vector<double> pure_cost(num_actions);
    for (int b = 0; b < num_actions; ++b) {
      pure_cost[b] = conditional_cost(game, i, b, x);
    }
    double current = 0.0;
    for (int a = 0; a < num_actions; ++a) {
      current += x.probs(i)[a] * pure_cost[a];
    }
    std::int64_t k = offsets[i];
    for (int a = 0; a < num_actions; ++a) {
      for (int b = 0; b < num_actions; ++b) {
        if (b == a) continue;
        report.entries[k++] = DeviationEntry{i, a, b, current - pure_cost[b]};
      }
    }
  }
  finalize(report);
  return report;
}

DeviationReport check_ce(const NormalFormGame& game,
                         const CorrelatedStrategy& y, double tol) {
  if (y.size() != game.num_joint_actions()) {
    throw std::invalid_argument("strategy length does not match game");
  }
  DeviationReport report;
  report.tol = tol;
  const std::vector<std::int64_t> offsets = player_entry_offsets(game);
  report.entries.resize(offsets.back());
  for (int i = 0; i < game.num_players(); ++i) {
    const int num_actions = game.action_count(i);
    std::int64_t k = offsets[i];
    for (int a = 0; a < num_actions; ++a) {
      for (int b = 0; b < num_actions; ++b) {
        if (b == a) continue;
        report.entries[k++] = DeviationEntry{i, a, b, 0.0};
      }
    }
  }
  // One pass over the joint space per player accumulates every (from, to)
  // pair for that player.
  for (int i = 0; i < game.num_players(); ++i) {
    const int num_actions = game.action_count(i);
    if (num_actions < 2) continue;
    const std::int64_t stride = game.stride(i);
    const std::vector<double>& costs = game.costs(i);
    for (std::int64_t flat = 0; flat < game.num_joint_actions(); ++flat) {
      const double mass = y[flat];
      const int a = game.action_of(i, flat);
      const std::int64_t base = offsets[i] +
                                static_cast<std::int64_t>(a) *
                                    (num_actions - 1);
      std::int64_t k = base;
      for (int b = 0; b < num_actions; ++b) {
        if (b == a) continue;
        const std::int64_t swapped = flat + (b - a) * stride;
        report.entries[k++].value += (costs[flat] - costs[swapped]) * mass;
      }
    }
  }
  finalize(report);
  return report;
}

double empirical_suboptimality(const NormalFormGame& game,
                               const CorrelatedStrategy& y) {
  return check_ce(game, y).max_violation;
}

StationarityReport check_fully_mixed_gne(const NormalFormGame& game,
                                         const Decomposition& d, double tol) {
  check_decomposition_shape(game, d.num_measures(), d.size());
  for (int i = 0; i < d.num_measures(); ++i) {
    const std::vector<double>& measure = d.measure(i);
    for (std::int64_t a = 0; a < d.size(); ++a) {
      if (!(measure[a] > 0.0)) {
        throw std::invalid_argument(
            "decomposition is not fully mixed: measure " + std::to_string(i) +
            " is zero at joint action " + std::to_string(a));
      }
    }
  }
  const std::int64_t num_actions = game.num_joint_actions();
  StationarityReport report;
  report.tol = tol;
  report.multipliers.resize(game.num_players());
  report.residuals.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    const std::vector<double>& costs = game.costs(i);
    double mean = 0.0;
    for (double c : costs) mean += c;
    mean /= static_cast<double>(num_actions);
    double residual = 0.0;
    for (double c : costs) residual = std::max(residual, std::abs(c - mean));
    report.multipliers[i] = mean;
    report.residuals[i] = residual;
    report.max_residual = std::max(report.max_residual, residual);
  }
  report.certified = report.max_residual <= tol;
  return report;
}

StationarityReport check_regularized_stationarity(
    const NormalFormGame& game, const Decomposition& d,
    const RegularizationWeights& lambda, double tol) {
  check_decomposition_shape(game, d.num_measures(), d.size());
  return regularized_stationarity(
      game, lambda,
      [&d](int i, std::int64_t a) {
        const double value = d.measure(i)[a];
        if (!(value > 0.0)) {
          throw std::invalid_argument("measure " + std::to_string(i) +
                                      " is zero at joint action " +
                                      std::to_string(a) +
                                      "; log-cost is undefined");
        }
        return std::log(value);
      },
      tol);
}

StationarityReport check_regularized_stationarity(
    const NormalFormGame& game, const LogDecomposition& d,
    const RegularizationWeights& lambda, double tol) {
  check_decomposition_shape(game, d.num_measures(), d.size());
  return regularized_stationarity(
      game, lambda,
      [&d](int i, std::int64_t a) { return d.log_measure(i)[a]; }, tol);
}

std::string to_json(const DeviationReport& report, bool verbose) {
  nlohmann::json j;
  j["max_violation"] = report.max_violation;
  if (report.witness) {
    j["witness"] = {{"player", report.witness->player},
                    {"from", report.witness->from_action},
                    {"to", report.witness->to_action}};
  } else {
    j["witness"] = nullptr;
  }
  if (verbose) {
    nlohmann::json entries = nlohmann::json::array();
    for (const DeviationEntry& entry : report.entries) {
      entries.push_back({{"player", entry.player},
                         {"from", entry.from_action},
                         {"to", entry.to_action},
                         {"value", entry.value}});
    }
    j["entries"] = std::move(entries);
  }
  return j.dump();
}

std::string to_json(const StationarityReport& report) {
  nlohmann::json j;
  j["multipliers"] = report.multipliers;
  j["residuals"] = report.residuals;
  j["max_residual"] = report.max_residual;
  j["tol"] = report.tol;
  j["certified"] = report.certified;
  return j.dump();
}

}  // namespace ceq
