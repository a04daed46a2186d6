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

#include "ceq/random_game.hpp"

#include <stdexcept>
#include <string>

namespace ceq {

namespace {

// SplitMix64 finalizer; decorrelates consecutive stream indices.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::mt19937_64 RngSpec::engine(std::uint64_t stream) const {
  return std::mt19937_64(mix(seed + stream));
}

double next_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

NormalFormGame gen_random_game(const std::vector<int>& action_counts,
                               std::mt19937_64& engine,
                               std::int64_t max_joint_actions) {
  if (action_counts.size() < 2) {
    throw std::invalid_argument("random game needs at least two players");
  }
  std::int64_t num_joint_actions = 1;
  for (int count : action_counts) {
    if (count < 2) {
      throw std::invalid_argument(
          "random game needs at least two actions per player");
    }
    num_joint_actions *= count;
    if (num_joint_actions > max_joint_actions) {
      throw std::invalid_argument("joint action space exceeds cap of " +
                                  std::to_string(max_joint_actions));
    }
  }
  std::vector<std::vector<double>> costs(action_counts.size());
  for (auto& player_costs : costs) {
    player_costs.resize(num_joint_actions);
    for (double& c : player_costs) c = next_uniform(engine);
  }
  return NormalFormGame(action_counts, std::move(costs));
}

}  // namespace ceq
