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

#include "ceq/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ceq {

namespace {

EpsilonCertificate certificate_from_log_measures(
    const std::vector<std::vector<double>>& log_measures,
    const RegularizationWeights& lambda) {
  if (static_cast<int>(log_measures.size()) != lambda.num_players()) {
    throw std::invalid_argument(
        "need one regularization weight per decomposition measure");
  }
  EpsilonCertificate cert;
  cert.epsilons.resize(log_measures.size());
  cert.bounds.resize(log_measures.size());
  for (std::size_t i = 0; i < log_measures.size(); ++i) {
    const auto [lo, hi] =
        std::minmax_element(log_measures[i].begin(), log_measures[i].end());
    cert.epsilons[i] = *hi - *lo;
    cert.bounds[i] = cert.epsilons[i] / lambda[static_cast<int>(i)];
    cert.max_epsilon = std::max(cert.max_epsilon, cert.epsilons[i]);
    cert.max_bound = std::max(cert.max_bound, cert.bounds[i]);
  }
  return cert;
}

}  // namespace

EntropySolution solve_closed_form(const NormalFormGame& game,
                                  const RegularizationWeights& lambda) {
  if (lambda.num_players() != game.num_players()) {
    throw std::invalid_argument("need one regularization weight per player");
  }
  const std::int64_t num_actions = game.num_joint_actions();
  const int num_players = game.num_players();

  // Exponent of the softmax: minus the lambda-weighted total cost. The
  // buffer becomes log_y once the normalizer is subtracted.
  std::vector<double> log_y(num_actions);
  {
    const std::vector<double>& costs = game.costs(0);
    const double weight = lambda[0];
    for (std::int64_t a = 0; a < num_actions; ++a) {
      log_y[a] = -weight * costs[a];
    }
  }
  for (int i = 1; i < num_players; ++i) {
    const std::vector<double>& costs = game.costs(i);
    const double weight = lambda[i];
    for (std::int64_t a = 0; a < num_actions; ++a) {
      log_y[a] -= weight * costs[a];
    }
  }

  // Max-shifted exponentials; dividing by their exact sum makes the stored
  // mass 1 up to a couple of ulps, and the same correction folds into the
  // log domain through the normalizer.
  const double shift = *std::max_element(log_y.begin(), log_y.end());
  std::vector<double> y(num_actions);
  for (std::int64_t a = 0; a < num_actions; ++a) {
    y[a] = std::exp(log_y[a] - shift);
  }
  const double sum = detail::compensated_sum(y);
  const double log_normalizer = shift + std::log(sum);
  for (std::int64_t a = 0; a < num_actions; ++a) {
    y[a] /= sum;
    log_y[a] -= log_normalizer;
  }

  std::vector<std::vector<double>> log_measures(num_players);
  for (int i = 0; i < num_players; ++i) {
    const std::vector<double>& costs = game.costs(i);
    const double weight = lambda[i];
    const double share = (lambda[i] / lambda.total()) * log_normalizer;
    log_measures[i].resize(num_actions);
    for (std::int64_t a = 0; a < num_actions; ++a) {
      log_measures[i][a] = -weight * costs[a] - share;
    }
  }

  return EntropySolution{lambda, LogDecomposition(std::move(log_measures)),
                         std::move(log_y),
                         CorrelatedStrategy(std::move(y))};
}

EpsilonCertificate epsilon_certificate(const Decomposition& d,
                                       const RegularizationWeights& lambda) {
  std::vector<std::vector<double>> log_measures(d.num_measures());
  for (int i = 0; i < d.num_measures(); ++i) {
    const std::vector<double>& measure = d.measure(i);
    log_measures[i].resize(measure.size());
    for (std::size_t a = 0; a < measure.size(); ++a) {
      if (!(measure[a] > 0.0)) {
        throw std::invalid_argument(
            "decomposition is not fully mixed: measure " + std::to_string(i) +
            " is zero at joint action " + std::to_string(a));
      }
      log_measures[i][a] = std::log(measure[a]);
    }
  }
  return certificate_from_log_measures(log_measures, lambda);
}

EpsilonCertificate epsilon_certificate(const LogDecomposition& d,
                                       const RegularizationWeights& lambda) {
  return certificate_from_log_measures(d.log_measures(), lambda);
}

CertificationResult certify(const NormalFormGame& game, const Decomposition& d,
                            const RegularizationWeights& lambda, double tol) {
  CertificationResult result;
  result.empirical = empirical_suboptimality(game, product_strategy(d));
  result.bound = epsilon_certificate(d, lambda).max_bound;
  result.holds = result.empirical <= result.bound + tol;
  return result;
}

CertificationResult certify(const NormalFormGame& game,
                            const EntropySolution& solution, double tol) {
  CertificationResult result;
  result.empirical = empirical_suboptimality(game, solution.y);
  result.bound =
      epsilon_certificate(solution.log_decomposition, solution.lambda)
          .max_bound;
  result.holds = result.empirical <= result.bound + tol;
  return result;
}

std::string to_json(const EntropySolution& solution) {
  const EpsilonCertificate cert =
      epsilon_certificate(solution.log_decomposition, solution.lambda);
  nlohmann::json j;
  j["lambda"] = solution.lambda.values();
  j["y"] = solution.y.probs();
  j["log_y"] = solution.log_y;
  j["log_measures"] = solution.log_decomposition.log_measures();
  j["certificate"] = {{"epsilons", cert.epsilons},
                      {"bounds", cert.bounds},
                      {"max_epsilon", cert.max_epsilon},
                      {"max_bound", cert.max_bound}};
  return j.dump();
}

}  // namespace ceq
