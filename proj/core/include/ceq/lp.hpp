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

#ifndef CEQ_LP_HPP_
#define CEQ_LP_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ceq/game.hpp"

namespace ceq {

/// A linear program over probability vectors:
///   minimize    objective . y          (optional)
///   subject to  ineq_rows . y <= ineq_rhs
///               sum(y) = 1
///               y >= 0
/// Rows built from a game carry a label naming the swap deviation they encode.
struct LinearProgram {
  struct RowLabel {
    int player = -1;
    int from_action = -1;
    int to_action = -1;
  };

  std::int64_t num_vars = 0;
  std::vector<std::vector<double>> ineq_rows;
  std::vector<double> ineq_rhs;
  std::vector<RowLabel> row_labels;   // parallel to ineq_rows; may be empty
  std::vector<double> objective;      // empty = feasibility only

  std::int64_t num_rows() const {
    return static_cast<std::int64_t>(ineq_rows.size());
  }
};

/// Builds the correlated-equilibrium polytope of `game`: one row per ordered
/// action pair (a, b), a != b, per player, in (player, a, b) ascending order.
/// Row (i, a, b) has coefficient cost_i(a, rest) - cost_i(b, rest) at column
/// flat(a, rest) for every opponent tuple `rest`, zero elsewhere; rhs 0.
/// Throws if the row count would exceed `max_rows`.
LinearProgram build_ce_polytope(const NormalFormGame& game,
                                std::int64_t max_rows = 1'000'000);

enum class SolveStatus {
  kOptimal,
  kFeasible,
  kInfeasible,
  kIterationLimit,
  kNumericFailure,
};

std::string to_string(SolveStatus status);

struct SolveOptions {
  double tol = 1e-8;         // feasibility tolerance on phase-1 mass
  double pivot_tol = 1e-11;  // smallest usable pivot element
  double enter_tol = 1e-9;   // reduced cost must beat this to enter
  std::int64_t max_iterations = 0;  // 0 = 50 * (rows + columns)
  bool trace = false;        // record the pivot sequence
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kNumericFailure;
  std::vector<double> y;     // present for feasible/optimal
  double objective = 0.0;
  std::int64_t iterations = 0;
  std::int64_t pivots = 0;
  /// For feasible/optimal outcomes: the max constraint violation of y.
  /// For infeasible outcomes: the residual infeasibility mass left after
  /// phase 1, which certifies that no feasible point exists up to numerics.
  double residual = 0.0;
  std::vector<std::pair<int, int>> pivot_trace;  // (entering, leaving) columns
};

/// Finds a feasible point with a phase-1 simplex under Bland's rule. The
/// outcome is deterministic for identical inputs.
SolveOutcome feasible_point(const LinearProgram& lp,
                            const SolveOptions& opts = {});

/// Minimizes lp.objective with a two-phase simplex under Bland's rule.
/// Termination with status optimal certifies nonnegative reduced costs.
SolveOutcome minimize_linear(const LinearProgram& lp,
                             const SolveOptions& opts = {});

/// Plain-text dump of the LP in the documented row/column order (columns are
/// flat joint-action indices, rows as built).
void write_lp(const LinearProgram& lp, std::ostream& out);
std::string to_text(const LinearProgram& lp);

}  // namespace ceq

#endif  // CEQ_LP_HPP_
