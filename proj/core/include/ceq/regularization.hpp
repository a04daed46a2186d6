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

#ifndef CEQ_REGULARIZATION_HPP_
#define CEQ_REGULARIZATION_HPP_

#include <vector>

namespace ceq {

/// Per-player entropy regularization weights. Every weight is strictly
/// positive and finite; a weight of zero is rejected because the regularized
/// cost divides by it.
class RegularizationWeights {
 public:
  explicit RegularizationWeights(std::vector<double> values);

  /// All players share the same weight.
  static RegularizationWeights uniform(int num_players, double value);

  int num_players() const { return static_cast<int>(values_.size()); }
  double operator[](int player) const { return values_[player]; }
  const std::vector<double>& values() const { return values_; }

  /// Sum of all weights.
  double total() const { return total_; }

 private:
  std::vector<double> values_;
  double total_ = 0.0;
};

}  // namespace ceq

#endif  // CEQ_REGULARIZATION_HPP_
