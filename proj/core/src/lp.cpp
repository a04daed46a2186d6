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

#include "ceq/lp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ceq {

namespace {

void validate(const LinearProgram& lp) {
  if (lp.num_vars < 1) throw std::invalid_argument("LP needs variables");
  if (lp.ineq_rhs.size() != lp.ineq_rows.size()) {
    throw std::invalid_argument("LP needs one rhs per inequality row");
  }
  for (const auto& row : lp.ineq_rows) {
    if (static_cast<std::int64_t>(row.size()) != lp.num_vars) {
      throw std::invalid_argument("LP row has wrong length");
    }
    for (double g : row) {
      if (!std::isfinite(g)) {
        throw std::invalid_argument("LP row has a non-finite entry");
      }
    }
  }
  for (double h : lp.ineq_rhs) {
    if (!std::isfinite(h)) {
      throw std::invalid_argument("LP rhs has a non-finite entry");
    }
  }
  if (!lp.objective.empty() &&
      static_cast<std::int64_t>(lp.objective.size()) != lp.num_vars) {
    throw std::invalid_argument("LP objective has wrong length");
  }
  for (double c : lp.objective) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("LP objective has a non-finite entry");
    }
  }
}

// Dense standard-form tableau for
//   G y + s = h   (rows sign-normalized so rhs >= 0),  sum(y) + t = 1
// with slacks s, one artificial per row whose slack cannot start basic, and
// Bland's rule throughout. Column order: y, s, artificials, rhs.
class SimplexTableau {
 public:
  SimplexTableau(const LinearProgram& lp, const SolveOptions& opts)
      : lp_(lp), opts_(opts) {
    n_ = lp.num_vars;
    m_ = lp.num_rows();
    rows_ = m_ + 1;  // + sum-to-one row

    // Sign-normalize and find which rows need artificials.
    std::vector<int> artificial_of_row(rows_, -1);
    num_artificials_ = 0;
    for (std::int64_t r = 0; r < m_; ++r) {
      if (lp.ineq_rhs[r] < 0.0) artificial_of_row[r] = num_artificials_++;
    }
    artificial_of_row[m_] = num_artificials_++;  // equality row

    cols_ = n_ + m_ + num_artificials_;
    tableau_.assign(rows_, std::vector<double>(cols_ + 1, 0.0));
    basis_.assign(rows_, -1);

    for (std::int64_t r = 0; r < m_; ++r) {
      const double sign = lp.ineq_rhs[r] < 0.0 ? -1.0 : 1.0;
      for (std::int64_t j = 0; j < n_; ++j) {
        tableau_[r][j] = sign * lp.ineq_rows[r][j];
      }
      tableau_[r][n_ + r] = sign;  // slack
      tableau_[r][cols_] = sign * lp.ineq_rhs[r];
      if (artificial_of_row[r] >= 0) {
        tableau_[r][n_ + m_ + artificial_of_row[r]] = 1.0;
        basis_[r] = static_cast<int>(n_ + m_ + artificial_of_row[r]);
      } else {
        basis_[r] = static_cast<int>(n_ + r);
      }
    }
    for (std::int64_t j = 0; j < n_; ++j) tableau_[m_][j] = 1.0;
    tableau_[m_][cols_] = 1.0;
    tableau_[m_][n_ + m_ + artificial_of_row[m_]] = 1.0;
    basis_[m_] = static_cast<int>(n_ + m_ + artificial_of_row[m_]);

    max_iterations_ = opts.max_iterations > 0
                          ? opts.max_iterations
                          : 50 * (rows_ + cols_);
  }

  bool is_artificial(int col) const { return col >= n_ + m_; }

  // Runs phase 1. Returns the residual infeasibility mass (the phase-1
  // objective at termination); negative return means an abnormal stop whose
  // status is already recorded in `outcome`.
  double run_phase1(SolveOutcome& outcome) {
    const auto recompute = [this](std::vector<double>& reduced) {
      for (std::int64_t j = 0; j <= cols_; ++j) {
        double z = 0.0;
        for (std::int64_t r = 0; r < rows_; ++r) {
          if (is_artificial(basis_[r])) z += tableau_[r][j];
        }
        reduced[j] = (j < cols_ && is_artificial(static_cast<int>(j)) ? 1.0
                                                                      : 0.0) -
                     z;
      }
    };
    std::vector<double> reduced(cols_ + 1, 0.0);
    recompute(reduced);
    if (!iterate(reduced, recompute, outcome)) return -1.0;

    double infeasibility = 0.0;
    for (std::int64_t r = 0; r < rows_; ++r) {
      if (is_artificial(basis_[r])) infeasibility += tableau_[r][cols_];
    }
    if (infeasibility > opts_.tol) {
      outcome.status = SolveStatus::kInfeasible;
      outcome.residual = infeasibility;
      return -1.0;
    }
    pivot_out_artificials();
    return infeasibility;
  }

  // Runs phase 2 on lp_.objective. Requires a feasible basis.
  bool run_phase2(SolveOutcome& outcome) {
    std::vector<double> cost(cols_, 0.0);
    for (std::int64_t j = 0; j < n_; ++j) cost[j] = lp_.objective[j];
    const auto recompute = [this, &cost](std::vector<double>& reduced) {
      for (std::int64_t j = 0; j <= cols_; ++j) {
        double z = 0.0;
        for (std::int64_t r = 0; r < rows_; ++r) {
          z += cost[basis_[r]] * tableau_[r][j];
        }
        reduced[j] = (j < cols_ ? cost[j] : 0.0) - z;
      }
    };
    std::vector<double> reduced(cols_ + 1, 0.0);
    recompute(reduced);
    return iterate(reduced, recompute, outcome);
  }

  std::vector<double> extract() const {
    std::vector<double> y(n_, 0.0);
    for (std::int64_t r = 0; r < rows_; ++r) {
      if (basis_[r] < n_) y[basis_[r]] = tableau_[r][cols_];
    }
    for (double& v : y) {
      if (v < 0.0 && v > -opts_.tol) v = 0.0;  // clamp ratio-test dust
    }
    // Tableau drift can leave the mass a few ulps-to-1e-9 off; cleaning it
    // here means a feasible outcome is always a valid probability vector.
    const double mass = detail::compensated_sum(y);
    if (mass > 0.0 && std::abs(mass - 1.0) <= opts_.tol) {
      for (double& v : y) v /= mass;
    }
    return y;
  }

  std::int64_t iterations() const { return iterations_; }
  std::int64_t pivots() const { return pivots_; }
  std::vector<std::pair<int, int>> take_trace() { return std::move(trace_); }

 private:
  // Entering rule: most negative reduced cost (ties to the lowest index).
  // Under Bland's anti-cycling regime the lowest eligible index is taken
  // instead. Artificial columns never re-enter.
  int pick_entering(const std::vector<double>& reduced, bool bland) const {
    int entering = -1;
    for (std::int64_t j = 0; j < cols_; ++j) {
      if (is_artificial(static_cast<int>(j))) continue;
      if (reduced[j] >= -opts_.enter_tol) continue;
      if (bland) return static_cast<int>(j);
      if (entering < 0 || reduced[j] < reduced[entering]) {
        entering = static_cast<int>(j);
      }
    }
    return entering;
  }

  // Leaving rule: minimum ratio with negative right-hand dust floored at
  // zero, so a step is never negative. Within a ratio tie band the largest
  // pivot element wins for numerical stability; under Bland's regime the
  // lowest basis index wins instead, which together with the Bland entering
  // rule excludes cycling. Pivots below `threshold` are ineligible. Returns
  // -1 if no eligible pivot exists.
  int pick_leaving_at(int entering, bool bland_ties, double threshold) const {
    const auto ratio_of = [&](std::int64_t r) {
      return std::max(tableau_[r][cols_], 0.0) / tableau_[r][entering];
    };
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::int64_t r = 0; r < rows_; ++r) {
      if (tableau_[r][entering] <= threshold) continue;
      best_ratio = std::min(best_ratio, ratio_of(r));
    }
    if (!std::isfinite(best_ratio)) return -1;
    const double band = best_ratio + 1e-9 * (1.0 + best_ratio);
    int leaving = -1;
    for (std::int64_t r = 0; r < rows_; ++r) {
      const double pivot = tableau_[r][entering];
      if (pivot <= threshold) continue;
      if (ratio_of(r) > band) continue;
      if (leaving < 0) {
        leaving = static_cast<int>(r);
      } else if (bland_ties) {
        if (basis_[r] < basis_[leaving]) leaving = static_cast<int>(r);
      } else if (pivot > tableau_[leaving][entering]) {
        leaving = static_cast<int>(r);
      }
    }
    return leaving;
  }

  // Tiny pivot elements poison the dense tableau, so they are a last resort:
  // rows with a comfortably sized pivot are tried first, the configured
  // floor only when none exists.
  int pick_leaving(int entering, bool bland_ties) const {
    const double strong = std::max(1e-7, opts_.pivot_tol);
    const int leaving = pick_leaving_at(entering, bland_ties, strong);
    if (leaving >= 0) return leaving;
    return pick_leaving_at(entering, bland_ties, opts_.pivot_tol);
  }

  // Pivots until no eligible entering column remains. A degenerate streak
  // longer than rows+cols switches both pivot rules to Bland's anti-cycling
  // regime until the objective moves again. The incremental reduced-cost row
  // drifts with elimination rounding, so an apparent optimum is re-verified
  // against a from-scratch recomputation before the phase is declared done.
  // Returns false on iteration limit or an unbounded direction (recorded in
  // `outcome`).
  bool iterate(std::vector<double>& reduced,
               const std::function<void(std::vector<double>&)>& recompute,
               SolveOutcome& outcome) {
    int reverifications = 0;
    std::int64_t degenerate_streak = 0;
    while (true) {
      if (iterations_ >= max_iterations_) {
        outcome.status = SolveStatus::kIterationLimit;
        return false;
      }
      ++iterations_;

      const bool bland = degenerate_streak > rows_ + cols_;
      int entering = pick_entering(reduced, bland);
      if (entering < 0) {
        recompute(reduced);
        entering = pick_entering(reduced, bland);
        if (entering < 0 || ++reverifications > 32) return true;
      }

      const int leaving_row = pick_leaving(entering, bland);
      if (leaving_row < 0) {
        // Unbounded direction: cannot happen on the compact CE polytope, so
        // surface it as a numeric failure rather than guessing.
        outcome.status = SolveStatus::kNumericFailure;
        return false;
      }
      const double step = tableau_[leaving_row][cols_] /
                          tableau_[leaving_row][entering];
      degenerate_streak = step > 1e-12 ? 0 : degenerate_streak + 1;
      pivot(leaving_row, entering, reduced);
    }
  }

  void pivot(int prow, int pcol, std::vector<double>& reduced) {
    if (opts_.trace) trace_.emplace_back(pcol, basis_[prow]);
    ++pivots_;
    std::vector<double>& pivot_row = tableau_[prow];
    const double pivot_value = pivot_row[pcol];
    for (double& v : pivot_row) v /= pivot_value;
    pivot_row[pcol] = 1.0;
    for (std::int64_t r = 0; r < rows_; ++r) {
      if (r == prow) continue;
      eliminate(tableau_[r], pivot_row, pcol);
      // Elimination dust below feasibility noise would otherwise force
      // negative ratios on later degenerate pivots.
      if (tableau_[r][cols_] < 0.0 && tableau_[r][cols_] > -1e-12) {
        tableau_[r][cols_] = 0.0;
      }
    }
    eliminate(reduced, pivot_row, pcol);
    basis_[prow] = pcol;
  }

  static void eliminate(std::vector<double>& row,
                        const std::vector<double>& pivot_row, int pcol) {
    const double factor = row[pcol];
    if (factor == 0.0) return;
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] -= factor * pivot_row[j];
    }
    row[pcol] = 0.0;
  }

  // Swap zero-valued basic artificials for regular columns where a usable
  // pivot exists, preferring the largest element; rows with none are
  // redundant and keep their artificial pinned at zero (it is barred from
  // re-entering).
  void pivot_out_artificials() {
    std::vector<double> unused(cols_ + 1, 0.0);
    for (std::int64_t r = 0; r < rows_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      std::int64_t best = -1;
      for (std::int64_t j = 0; j < n_ + m_; ++j) {
        if (std::abs(tableau_[r][j]) <= opts_.pivot_tol) continue;
        if (best < 0 || std::abs(tableau_[r][j]) > std::abs(tableau_[r][best])) {
          best = j;
        }
      }
      if (best >= 0) pivot(static_cast<int>(r), static_cast<int>(best), unused);
    }
  }

  const LinearProgram& lp_;
  const SolveOptions opts_;
  std::int64_t n_ = 0;
  std::int64_t m_ = 0;
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  int num_artificials_ = 0;
  std::vector<std::vector<double>> tableau_;
  std::vector<int> basis_;
  std::int64_t iterations_ = 0;
  std::int64_t pivots_ = 0;
  std::int64_t max_iterations_ = 0;
  std::vector<std::pair<int, int>> trace_;
};

double constraint_residual(const LinearProgram& lp,
                           const std::vector<double>& y) {
  double residual = 0.0;
  for (std::int64_t r = 0; r < lp.num_rows(); ++r) {
    double lhs = 0.0;
    for (std::int64_t j = 0; j < lp.num_vars; ++j) {
      lhs += lp.ineq_rows[r][j] * y[j];
    }
    residual = std::max(residual, lhs - lp.ineq_rhs[r]);
  }
  residual = std::max(
      residual, std::abs(detail::compensated_sum(y) - 1.0));
  for (double v : y) residual = std::max(residual, -v);
  return residual;
}

double objective_value(const LinearProgram& lp, const std::vector<double>& y) {
  if (lp.objective.empty()) return 0.0;
  double value = 0.0;
  for (std::int64_t j = 0; j < lp.num_vars; ++j) {
    value += lp.objective[j] * y[j];
  }
  return value;
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, end);
}

}  // namespace

LinearProgram build_ce_polytope(const NormalFormGame& game,
                                std::int64_t max_rows) {
  std::int64_t num_rows = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    const std::int64_t a = game.action_count(i);
    num_rows += a * (a - 1);
    if (num_rows > max_rows) {
      throw std::invalid_argument(
          "CE polytope would need more than " + std::to_string(max_rows) +
          " rows");
    }
  }

  LinearProgram lp;
  lp.num_vars = game.num_joint_actions();
  lp.ineq_rows.reserve(num_rows);
  lp.ineq_rhs.assign(num_rows, 0.0);
  lp.row_labels.reserve(num_rows);

  for (int i = 0; i < game.num_players(); ++i) {
    const int num_actions = game.action_count(i);
    const std::int64_t stride = game.stride(i);
    const std::vector<double>& costs = game.costs(i);
    for (int a = 0; a < num_actions; ++a) {
      for (int b = 0; b < num_actions; ++b) {
        if (b == a) continue;
        std::vector<double> row(lp.num_vars, 0.0);
        for (std::int64_t flat = 0; flat < game.num_joint_actions(); ++flat) {
          if (game.action_of(i, flat) != a) continue;
          row[flat] = costs[flat] - costs[flat + (b - a) * stride];
        }
        lp.ineq_rows.push_back(std::move(row));
        lp.row_labels.push_back({i, a, b});
      }
    }
  }
  return lp;
}

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kIterationLimit: return "iteration-limit";
    case SolveStatus::kNumericFailure: return "numeric-failure";
  }
  return "unknown";
}

namespace {

// Claiming success is only allowed when the extracted point actually
// satisfies the original constraints; a drifted tableau is reported as a
// numeric failure, never as a feasible answer.
void finish(const LinearProgram& lp, SimplexTableau& tableau,
            const SolveOptions& opts, SolveStatus on_success,
            SolveOutcome& outcome) {
  outcome.y = tableau.extract();
  outcome.objective = objective_value(lp, outcome.y);
  outcome.residual = constraint_residual(lp, outcome.y);
  outcome.status =
      outcome.residual <= opts.tol ? on_success : SolveStatus::kNumericFailure;
}

}  // namespace

SolveOutcome feasible_point(const LinearProgram& lp, const SolveOptions& opts) {
  validate(lp);
  SolveOutcome outcome;
  SimplexTableau tableau(lp, opts);
  if (tableau.run_phase1(outcome) >= 0.0) {
    finish(lp, tableau, opts, SolveStatus::kFeasible, outcome);
  }
  outcome.iterations = tableau.iterations();
  outcome.pivots = tableau.pivots();
  outcome.pivot_trace = tableau.take_trace();
  return outcome;
}

SolveOutcome minimize_linear(const LinearProgram& lp,
                             const SolveOptions& opts) {
  validate(lp);
  if (lp.objective.empty()) {
    throw std::invalid_argument("minimize_linear needs an objective");
  }
  SolveOutcome outcome;
  SimplexTableau tableau(lp, opts);
  if (tableau.run_phase1(outcome) >= 0.0 && tableau.run_phase2(outcome)) {
    finish(lp, tableau, opts, SolveStatus::kOptimal, outcome);
  }
  outcome.iterations = tableau.iterations();
  outcome.pivots = tableau.pivots();
  outcome.pivot_trace = tableau.take_trace();
  return outcome;
}

void write_lp(const LinearProgram& lp, std::ostream& out) {
  out << to_text(lp);
}

std::string to_text(const LinearProgram& lp) {
  validate(lp);
  std::string text;
  text += "ceq-lp 1\n";
  text += "vars " + std::to_string(lp.num_vars) + "\n";
  text += "rows " + std::to_string(lp.num_rows()) + "\n";
  if (lp.objective.empty()) {
    text += "objective none\n";
  } else {
    text += "objective";
    for (double c : lp.objective) {
      text += ' ';
      append_double(text, c);
    }
    text += '\n';
  }
  for (std::int64_t r = 0; r < lp.num_rows(); ++r) {
    text += "row " + std::to_string(r);
    if (r < static_cast<std::int64_t>(lp.row_labels.size()) &&
        lp.row_labels[r].player >= 0) {
      const auto& label = lp.row_labels[r];
      text += " player " + std::to_string(label.player) + " swap " +
              std::to_string(label.from_action) + "->" +
              std::to_string(label.to_action);
    }
    text += " :";
    for (double g : lp.ineq_rows[r]) {
      text += ' ';
      append_double(text, g);
    }
    text += " <= ";
    append_double(text, lp.ineq_rhs[r]);
    text += '\n';
  }
  text += "sum_to_one\n";
  text += "nonneg\n";
  return text;
}

}  // namespace ceq
