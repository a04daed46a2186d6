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

#include "ceq/game.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ceq {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace

namespace detail {

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

}  // namespace detail

NormalFormGame::NormalFormGame(std::vector<int> action_counts,
                               std::vector<std::vector<double>> costs)
    : action_counts_(std::move(action_counts)), costs_(std::move(costs)) {
  if (action_counts_.size() < 2) fail("game needs at least two players");
  num_joint_actions_ = 1;
  for (std::size_t i = 0; i < action_counts_.size(); ++i) {
    if (action_counts_[i] < 1) {
      fail("action count of player " + std::to_string(i) + " must be >= 1");
    }
    if (num_joint_actions_ >
        std::numeric_limits<std::int64_t>::max() / action_counts_[i]) {
      fail("joint action space overflows 64-bit indexing");
    }
    num_joint_actions_ *= action_counts_[i];
  }
  strides_.assign(action_counts_.size(), 1);
  for (int i = static_cast<int>(action_counts_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * action_counts_[i + 1];
  }
  if (costs_.size() != action_counts_.size()) {
    fail("need one cost array per player");
  }
  for (std::size_t i = 0; i < costs_.size(); ++i) {
    if (static_cast<std::int64_t>(costs_[i].size()) != num_joint_actions_) {
      fail("cost array of player " + std::to_string(i) + " has " +
           std::to_string(costs_[i].size()) + " entries, expected " +
           std::to_string(num_joint_actions_));
    }
    for (double c : costs_[i]) {
      if (!std::isfinite(c)) {
        fail("cost array of player " + std::to_string(i) +
             " contains a non-finite entry");
      }
    }
  }
}

int NormalFormGame::action_count(int player) const {
  if (player < 0 || player >= num_players()) {
    throw std::out_of_range("player index out of range");
  }
  return action_counts_[player];
}

std::int64_t NormalFormGame::stride(int player) const {
  if (player < 0 || player >= num_players()) {
    throw std::out_of_range("player index out of range");
  }
  return strides_[player];
}

std::int64_t NormalFormGame::joint_index(std::span<const int> actions) const {
  if (static_cast<int>(actions.size()) != num_players()) {
    throw std::out_of_range("joint action needs one component per player");
  }
  std::int64_t flat = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (actions[i] < 0 || actions[i] >= action_counts_[i]) {
      throw std::out_of_range("action " + std::to_string(actions[i]) +
                              " of player " + std::to_string(i) +
                              " out of range");
    }
    flat += actions[i] * strides_[i];
  }
  return flat;
}

std::vector<int> NormalFormGame::joint_tuple(std::int64_t flat) const {
  if (flat < 0 || flat >= num_joint_actions_) {
    throw std::out_of_range("flat joint action index out of range");
  }
  std::vector<int> actions(num_players());
  for (int i = 0; i < num_players(); ++i) {
    actions[i] = static_cast<int>((flat / strides_[i]) % action_counts_[i]);
  }
  return actions;
}

int NormalFormGame::action_of(int player, std::int64_t flat) const {
  return static_cast<int>((flat / stride(player)) % action_counts_[player]);
}

double NormalFormGame::cost(int player, std::int64_t flat) const {
  if (flat < 0 || flat >= num_joint_actions_) {
    throw std::out_of_range("flat joint action index out of range");
  }
  return costs(player)[flat];
}

const std::vector<double>& NormalFormGame::costs(int player) const {
  if (player < 0 || player >= num_players()) {
    throw std::out_of_range("player index out of range");
  }
  return costs_[player];
}

namespace {

void check_simplex(const std::vector<double>& probs, double mass_tol,
                   const char* what) {
  if (probs.empty()) fail(std::string(what) + " must not be empty");
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      fail(std::string(what) + " contains a negative or non-finite entry");
    }
  }
  const double mass = detail::compensated_sum(probs);
  if (std::abs(mass - 1.0) > mass_tol) {
    fail(std::string(what) + " mass " + std::to_string(mass) +
         " deviates from 1 by more than " + std::to_string(mass_tol));
  }
}

}  // namespace

JointStrategy::JointStrategy(std::vector<std::vector<double>> probs,
                             double mass_tol)
    : probs_(std::move(probs)) {
  if (probs_.size() < 2) fail("joint strategy needs at least two players");
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    check_simplex(probs_[i], mass_tol, "player strategy");
  }
}

const std::vector<double>& JointStrategy::probs(int player) const {
  if (player < 0 || player >= num_players()) {
    throw std::out_of_range("player index out of range");
  }
  return probs_[player];
}

CorrelatedStrategy::CorrelatedStrategy(std::vector<double> probs,
                                       double mass_tol)
    : probs_(std::move(probs)) {
  check_simplex(probs_, mass_tol, "correlated strategy");
}

Decomposition::Decomposition(std::vector<std::vector<double>> measures)
    : measures_(std::move(measures)) {
  if (measures_.empty()) fail("decomposition needs at least one measure");
  for (std::size_t i = 0; i < measures_.size(); ++i) {
    if (measures_[i].size() != measures_[0].size()) {
      fail("all measures must share the same length");
    }
    if (measures_[i].empty()) fail("measures must not be empty");
    for (double m : measures_[i]) {
      if (!(m >= 0.0) || !std::isfinite(m)) {
        fail("measure " + std::to_string(i) +
             " contains a negative or non-finite entry");
      }
    }
  }
}

std::int64_t Decomposition::size() const {
  return static_cast<std::int64_t>(measures_[0].size());
}

const std::vector<double>& Decomposition::measure(int i) const {
  if (i < 0 || i >= num_measures()) {
    throw std::out_of_range("measure index out of range");
  }
  return measures_[i];
}

bool Decomposition::fully_mixed() const {
  for (const auto& measure : measures_) {
    for (double m : measure) {
      if (m <= 0.0) return false;
    }
  }
  return true;
}

bool Decomposition::normalized(double mass_tol) const {
  double mass = detail::compensated_sum(product(*this));
  return std::abs(mass - 1.0) <= mass_tol;
}

LogDecomposition::LogDecomposition(std::vector<std::vector<double>> log_measures)
    : log_measures_(std::move(log_measures)) {
  if (log_measures_.empty()) fail("decomposition needs at least one measure");
  for (const auto& log_measure : log_measures_) {
    if (log_measure.size() != log_measures_[0].size()) {
      fail("all measures must share the same length");
    }
    if (log_measure.empty()) fail("measures must not be empty");
    for (double v : log_measure) {
      if (!std::isfinite(v)) fail("log-measures must be finite");
    }
  }
}

std::int64_t LogDecomposition::size() const {
  return static_cast<std::int64_t>(log_measures_[0].size());
}

const std::vector<double>& LogDecomposition::log_measure(int i) const {
  if (i < 0 || i >= num_measures()) {
    throw std::out_of_range("measure index out of range");
  }
  return log_measures_[i];
}

Decomposition LogDecomposition::to_linear() const {
  std::vector<std::vector<double>> measures(log_measures_.size());
  for (std::size_t i = 0; i < log_measures_.size(); ++i) {
    measures[i].reserve(log_measures_[i].size());
    for (double v : log_measures_[i]) measures[i].push_back(std::exp(v));
  }
  return Decomposition(std::move(measures));
}

double expected_cost(const NormalFormGame& game, const CorrelatedStrategy& y,
                     int player) {
  if (y.size() != game.num_joint_actions()) {
    throw std::invalid_argument("strategy length does not match game");
  }
  const std::vector<double>& costs = game.costs(player);
  double sum = 0.0;
  for (std::int64_t a = 0; a < y.size(); ++a) sum += y[a] * costs[a];
  return sum;
}

double conditional_cost(const NormalFormGame& game, int player, int action,
                        const JointStrategy& x) {
  if (x.num_players() != game.num_players()) {
    throw std::invalid_argument("strategy has wrong number of players");
  }
  for (int j = 0; j < game.num_players(); ++j) {
    if (j != player && static_cast<int>(x.probs(j).size()) !=
                           game.action_count(j)) {
      throw std::invalid_argument("strategy of player " + std::to_string(j) +
                                  " does not match game");
    }
  }
  if (action < 0 || action >= game.action_count(player)) {
    throw std::out_of_range("action out of range");
  }

  const int n = game.num_players();
  const std::vector<double>& costs = game.costs(player);
  // Odometer over the opponents' joint actions; `flat` tracks the full joint
  // index with our own component pinned to `action`.
  std::vector<int> tuple(n, 0);
  std::int64_t flat = action * game.stride(player);
  double sum = 0.0;
  while (true) {
    double weight = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != player) weight *= x.probs(j)[tuple[j]];
    }
    sum += weight * costs[flat];
    int j = n - 1;
    for (; j >= 0; --j) {
      if (j == player) continue;
      if (tuple[j] + 1 < game.action_count(j)) {
        ++tuple[j];
        flat += game.stride(j);
        break;
      }
      flat -= static_cast<std::int64_t>(tuple[j]) * game.stride(j);
      tuple[j] = 0;
    }
    if (j < 0) break;
  }
  return sum;
}

CorrelatedStrategy induce_correlated(const NormalFormGame& game,
                                     const JointStrategy& x) {
  if (x.num_players() != game.num_players()) {
    throw std::invalid_argument("strategy has wrong number of players");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    if (static_cast<int>(x.probs(i).size()) != game.action_count(i)) {
      throw std::invalid_argument("strategy of player " + std::to_string(i) +
                                  " does not match game");
    }
  }
  std::vector<double> y(game.num_joint_actions(), 1.0);
  for (std::int64_t a = 0; a < game.num_joint_actions(); ++a) {
    for (int i = 0; i < game.num_players(); ++i) {
      y[a] *= x.probs(i)[game.action_of(i, a)];
    }
  }
  return CorrelatedStrategy(std::move(y));
}

std::vector<double> product(const Decomposition& d) {
  std::vector<double> result = d.measure(0);
  for (int i = 1; i < d.num_measures(); ++i) {
    const std::vector<double>& m = d.measure(i);
    for (std::size_t a = 0; a < result.size(); ++a) result[a] *= m[a];
  }
  return result;
}

CorrelatedStrategy product_strategy(const Decomposition& d, double mass_tol) {
  std::vector<double> y = product(d);
  double mass = detail::compensated_sum(y);
  if (std::abs(mass - 1.0) > mass_tol) {
    throw std::invalid_argument("decomposition product has mass " +
                                std::to_string(mass) +
                                ", not 1; normalize explicitly if intended");
  }
  return CorrelatedStrategy(std::move(y), mass_tol);
}

Decomposition rescale_pair(const Decomposition& d, int i, int j,
                           double factor) {
  if (i == j) throw std::invalid_argument("rescale_pair needs i != j");
  if (i < 0 || i >= d.num_measures() || j < 0 || j >= d.num_measures()) {
    throw std::out_of_range("measure index out of range");
  }
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("rescale factor must be positive and finite");
  }
  std::vector<std::vector<double>> measures = d.measures();
  for (double& v : measures[i]) v *= factor;
  for (double& v : measures[j]) v /= factor;
  return Decomposition(std::move(measures));
}

CorrelatedStrategy normalize_to_strategy(std::vector<double> weights) {
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("weights must be finite and nonnegative");
    }
  }
  double mass = detail::compensated_sum(weights);
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("weights must have positive finite mass");
  }
  for (double& w : weights) w /= mass;
  return CorrelatedStrategy(std::move(weights));
}

}  // namespace ceq
