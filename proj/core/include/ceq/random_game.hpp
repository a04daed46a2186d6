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

#ifndef CEQ_RANDOM_GAME_HPP_
#define CEQ_RANDOM_GAME_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ceq/game.hpp"

namespace ceq {

/// Deterministic, platform-independent randomness: a 64-bit base seed plus a
/// stream index. Streams are mt19937_64 engines (whose output sequence is
/// fixed by the standard) seeded with the SplitMix64 finalizer of
/// seed + stream, and doubles are drawn by the 53-bit shift, never through
/// distribution objects, so the same spec yields bit-identical values
/// everywhere.
struct RngSpec {
  std::uint64_t seed = 0;

  std::mt19937_64 engine(std::uint64_t stream = 0) const;
};

/// Next double in [0, 1) from the top 53 bits of the engine output.
double next_uniform(std::mt19937_64& engine);

/// A game whose costs are i.i.d. uniform on [0, 1). Requires at least two
/// players with at least two actions each and at most `max_joint_actions`
/// joint actions.
NormalFormGame gen_random_game(const std::vector<int>& action_counts,
                               std::mt19937_64& engine,
                               std::int64_t max_joint_actions = 1'000'000);

}  // namespace ceq

#endif  // CEQ_RANDOM_GAME_HPP_
