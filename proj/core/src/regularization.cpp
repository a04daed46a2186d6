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

#include "ceq/regularization.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ceq {

RegularizationWeights::RegularizationWeights(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("regularization weights must not be empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
      throw std::invalid_argument("regularization weight of player " +
                                  std::to_string(i) +
                                  " must be strictly positive and finite");
    }
    total_ += values_[i];
  }
  if (!std::isfinite(total_)) {
    throw std::invalid_argument("total regularization weight overflows");
  }
}

RegularizationWeights RegularizationWeights::uniform(int num_players,
                                                     double value) {
  if (num_players < 1) {
    throw std::invalid_argument("need at least one player");
  }
  return RegularizationWeights(
      std::vector<double>(static_cast<std::size_t>(num_players), value));
}

}  // namespace ceq
