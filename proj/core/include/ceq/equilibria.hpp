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

#ifndef CEQ_EQUILIBRIA_HPP_
#define CEQ_EQUILIBRIA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ceq/game.hpp"
#include "ceq/regularization.hpp"

namespace ceq {

/// One swap deviation: the gain (positive = profitable) for `player` of
/// replacing recommended action `from_action` with `to_action`.
struct DeviationEntry {
  int player = 0;
  int from_action = 0;
  int to_action = 0;
  double value = 0.0;
};

/// All ordered swap deviations of a strategy, sum_i A_i*(A_i-1) entries in
/// (player, from, to) order. max_violation is the largest entry value, 0 when
/// no deviation exists (every player has a single action); witness is the
/// first entry attaining it.
struct DeviationReport {
  std::vector<DeviationEntry> entries;
  double max_violation = 0.0;
  std::optional<DeviationEntry> witness;
  double tol = kConditionTol;

  /// The checked condition holds at the tolerance the report was made with.
  bool holds() const { return max_violation <= tol; }
  bool within(double t) const { return max_violation <= t; }
};

/// Per-player stationarity of a decomposition: the estimated equal-cost
/// multiplier and the worst deviation from it.
struct StationarityReport {
  std::vector<double> multipliers;  // sigma_i estimates
  std::vector<double> residuals;    // max_a |cost_i(a) - multiplier_i|
  double max_residual = 0.0;
  double tol = 0.0;
  bool certified = false;
};

/// Nash condition check: for each player i and each pure deviation b, the
/// entry value is (expected cost of x_i) - (cost of playing b), both against
/// x_{-i}. The value is replicated across the `from_action` slots so that the
/// report enumerates the same ordered pairs as check_ce. The strategy is a
/// Nash equilibrium up to tol iff max_violation <= tol.
DeviationReport check_nash(const NormalFormGame& game, const JointStrategy& x,
                           double tol = kConditionTol);

/// Correlated equilibrium condition check: entry (i, a, b) carries
/// sum_{a_{-i}} (cost_i(a, a_{-i}) - cost_i(b, a_{-i})) * y(a, a_{-i}).
/// y is a correlated equilibrium up to tol iff max_violation <= tol.
DeviationReport check_ce(const NormalFormGame& game,
                         const CorrelatedStrategy& y,
                         double tol = kConditionTol);

/// Largest swap-deviation gain of y: the max entry of check_ce, an
/// infinity-norm distance proxy to the correlated-equilibrium polytope.
double empirical_suboptimality(const NormalFormGame& game,
                               const CorrelatedStrategy& y);

/// Stationarity of a fully mixed decomposition in the unregularized game:
/// certification requires every player's cost to be constant across joint
/// actions (multiplier = mean cost, residual = max deviation from it). Throws
/// if d is not fully mixed, naming the offending measure entry.
StationarityReport check_fully_mixed_gne(const NormalFormGame& game,
                                         const Decomposition& d,
                                         double tol = kConditionTol);

/// Stationarity of a fully mixed decomposition under entropy regularization:
/// the regularized cost cost_i(a) + log(alpha_i(a)) / lambda_i must be
/// constant in a. The multiplier is estimated as minus the mean regularized
/// cost; the residual is the worst |regularized cost + multiplier|.
StationarityReport check_regularized_stationarity(
    const NormalFormGame& game, const Decomposition& d,
    const RegularizationWeights& lambda, double tol = kStationarityTol);

/// Log-domain variant for measures too extreme to represent linearly.
StationarityReport check_regularized_stationarity(
    const NormalFormGame& game, const LogDecomposition& d,
    const RegularizationWeights& lambda, double tol = kStationarityTol);

/// JSON serialization: {"max_violation": f, "witness": {...} | null,
/// "entries": [...]}; entries are included only when verbose.
std::string to_json(const DeviationReport& report, bool verbose = false);
std::string to_json(const StationarityReport& report);

}  // namespace ceq

#endif  // CEQ_EQUILIBRIA_HPP_
