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

#ifndef CEQ_ENTROPY_HPP_
#define CEQ_ENTROPY_HPP_

#include <string>
#include <vector>

#include "ceq/equilibria.hpp"
#include "ceq/game.hpp"
#include "ceq/regularization.hpp"

namespace ceq {

/// Per-player log-ratio spread of a strictly positive decomposition and the
/// swap-deviation bound it implies: epsilon_i is the spread of log alpha_i,
/// bound_i = epsilon_i / lambda_i caps every swap-deviation gain of player i.
struct EpsilonCertificate {
  std::vector<double> epsilons;
  std::vector<double> bounds;
  double max_epsilon = 0.0;
  double max_bound = 0.0;
};

/// Closed-form entropy-regularized solution. The measures are kept in log
/// space; the product y is exact softmax mass and always materializable, but
/// individual linear measures may underflow at large lambda, so use the log
/// accessors for anything numerical.
struct EntropySolution {
  RegularizationWeights lambda;
  LogDecomposition log_decomposition;
  std::vector<double> log_y;
  CorrelatedStrategy y;
};

/// Solves the entropy-regularized measure game in closed form:
///   alpha_i(a) = exp(-lambda_i * cost_i(a)) / Z^(lambda_i / lambda_total)
///   y(a)       = exp(-sum_j lambda_j * cost_j(a)) / Z
/// with Z the normalizer of the weighted total cost. Everything is evaluated
/// in the log domain with a max shift, so weighted costs up to ~1e4 * |cost|
/// neither overflow nor break normalization; y sums to 1 within 1e-12.
EntropySolution solve_closed_form(const NormalFormGame& game,
                                  const RegularizationWeights& lambda);

/// Certificate from a strictly positive decomposition. Throws if any measure
/// entry is zero or negative.
EpsilonCertificate epsilon_certificate(const Decomposition& d,
                                       const RegularizationWeights& lambda);
EpsilonCertificate epsilon_certificate(const LogDecomposition& d,
                                       const RegularizationWeights& lambda);

struct CertificationResult {
  double empirical = 0.0;  // worst swap-deviation gain of the product
  double bound = 0.0;      // max_i epsilon_i / lambda_i
  bool holds = false;      // empirical <= bound + tol
};

/// Checks the suboptimality bound: the empirical worst swap-deviation gain of
/// the product of `d` must not exceed the certificate bound.
CertificationResult certify(const NormalFormGame& game, const Decomposition& d,
                            const RegularizationWeights& lambda,
                            double tol = kConditionTol);
CertificationResult certify(const NormalFormGame& game,
                            const EntropySolution& solution,
                            double tol = kConditionTol);

/// JSON with linear and log-domain y, per-player log measures, lambda, and
/// the certificate.
std::string to_json(const EntropySolution& solution);

}  // namespace ceq

#endif  // CEQ_ENTROPY_HPP_
