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

#ifndef CEQ_GAME_HPP_
#define CEQ_GAME_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace ceq {

// Default tolerances. The mass tolerance applies to probability-simplex
// membership checks, the condition tolerance to equilibrium condition checks,
// and the stationarity tolerance to closed-form stationarity residuals.
inline constexpr double kMassTol = 1e-9;
inline constexpr double kConditionTol = 1e-8;
inline constexpr double kStationarityTol = 1e-10;

/// A finite normal-form game: per-player action counts and, for every player,
/// a cost for each joint action.
///
/// Joint actions are addressed by a flat index in mixed-radix order with the
/// last player varying fastest: flat(a_1,...,a_N) = sum_k a_k * prod_{j>k} A_j.
/// Cost arrays are stored flat in that order. All costs are finite doubles;
/// the constructor rejects anything else.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<int> action_counts,
                 std::vector<std::vector<double>> costs);

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  int action_count(int player) const;

  /// Total number of joint actions A = prod_i A_i.
  std::int64_t num_joint_actions() const { return num_joint_actions_; }

  /// Distance between consecutive actions of `player` in flat order.
  std::int64_t stride(int player) const;

  /// Flat index of a joint action given one action per player.
  std::int64_t joint_index(std::span<const int> actions) const;

  /// Inverse of joint_index.
  std::vector<int> joint_tuple(std::int64_t flat) const;

  /// Component of `player` within the joint action `flat`.
  int action_of(int player, std::int64_t flat) const;

  double cost(int player, std::int64_t flat) const;
  const std::vector<double>& costs(int player) const;

 private:
  std::vector<int> action_counts_;
  std::vector<std::int64_t> strides_;
  std::int64_t num_joint_actions_ = 0;
  std::vector<std::vector<double>> costs_;
};

/// One probability distribution per player over that player's own actions.
class JointStrategy {
 public:
  explicit JointStrategy(std::vector<std::vector<double>> probs,
                         double mass_tol = kMassTol);

  int num_players() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& probs(int player) const;
  const std::vector<std::vector<double>>& probs() const { return probs_; }

 private:
  std::vector<std::vector<double>> probs_;
};

/// A single probability distribution over the joint action space.
class CorrelatedStrategy {
 public:
  explicit CorrelatedStrategy(std::vector<double> probs,
                              double mass_tol = kMassTol);

  std::int64_t size() const { return static_cast<std::int64_t>(probs_.size()); }
  double operator[](std::int64_t a) const { return probs_[a]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// N unnormalized measures over the joint action space. Their element-wise
/// product is a candidate correlated strategy; nothing forces individual
/// measures to sum to anything.
class Decomposition {
 public:
  explicit Decomposition(std::vector<std::vector<double>> measures);

  int num_measures() const { return static_cast<int>(measures_.size()); }
  std::int64_t size() const;
  const std::vector<double>& measure(int i) const;
  const std::vector<std::vector<double>>& measures() const { return measures_; }

  /// True iff every entry of every measure is strictly positive.
  bool fully_mixed() const;

  /// True iff the element-wise product sums to 1 within `mass_tol`.
  bool normalized(double mass_tol = kMassTol) const;

 private:
  std::vector<std::vector<double>> measures_;
};

/// A strictly positive decomposition stored as log-measures. This is the
/// representation of choice when measures would underflow in linear space
/// (e.g. exp(-lambda * cost) at large lambda).
class LogDecomposition {
 public:
  explicit LogDecomposition(std::vector<std::vector<double>> log_measures);

  int num_measures() const { return static_cast<int>(log_measures_.size()); }
  std::int64_t size() const;
  const std::vector<double>& log_measure(int i) const;
  const std::vector<std::vector<double>>& log_measures() const {
    return log_measures_;
  }

  /// Entry-wise exp. Entries may underflow to 0 in linear space; throws if
  /// any entry overflows past the largest finite double.
  Decomposition to_linear() const;

 private:
  std::vector<std::vector<double>> log_measures_;
};

/// Expected cost of player `player` under correlated strategy `y`:
/// sum_a y(a) * cost_i(a).
double expected_cost(const NormalFormGame& game, const CorrelatedStrategy& y,
                     int player);

/// Expected cost of player `player` for playing `action` while every other
/// player j draws independently from x.probs(j). x.probs(player) is ignored.
double conditional_cost(const NormalFormGame& game, int player, int action,
                        const JointStrategy& x);

/// The product distribution y(a) = prod_i x_i(a_i) induced by independent
/// play of `x`.
CorrelatedStrategy induce_correlated(const NormalFormGame& game,
                                     const JointStrategy& x);

/// Element-wise product of the measures of `d`.
std::vector<double> product(const Decomposition& d);

/// Element-wise product of `d`, returned as a correlated strategy. Throws if
/// the product mass deviates from 1 by more than `mass_tol`; there is no
/// silent renormalization (see normalize_to_strategy).
CorrelatedStrategy product_strategy(const Decomposition& d,
                                    double mass_tol = kMassTol);

/// Scales measure `i` by `factor` and measure `j` by 1/`factor`. The
/// element-wise product is unchanged up to rounding.
Decomposition rescale_pair(const Decomposition& d, int i, int j,
                           double factor);

/// Explicit opt-in renormalization: divides `weights` by its total mass and
/// returns the result as a correlated strategy. Throws if the mass is zero,
/// negative, or not finite.
CorrelatedStrategy normalize_to_strategy(std::vector<double> weights);

namespace detail {
/// Sum with Neumaier compensation; used wherever probability masses are
/// accumulated so that tolerance checks measure the data, not the summation.
double compensated_sum(std::span<const double> values);
}  // namespace detail

}  // namespace ceq

#endif  // CEQ_GAME_HPP_
