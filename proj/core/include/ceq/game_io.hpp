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

#ifndef CEQ_GAME_IO_HPP_
#define CEQ_GAME_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ceq/game.hpp"

namespace ceq {

/// Raised on malformed input files; the message names the offending line or
/// field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Game file format (JSON):
///   {"num_players": N, "actions": [A_1..A_N], "costs": [[...] per player]}
/// Cost arrays are flat in joint-action order (last player fastest). NaN,
/// infinities, and length mismatches are rejected.
NormalFormGame parse_game(const std::string& text,
                          const std::string& source = "<input>");
NormalFormGame load_game(std::istream& in,
                         const std::string& source = "<stream>");
NormalFormGame load_game_file(const std::string& path);

std::string to_json(const NormalFormGame& game);

/// Strategy files: either a bare JSON array or {"y": [...]} for correlated
/// strategies, {"x": [[...] per player]} for joint strategies.
CorrelatedStrategy parse_correlated_strategy(
    const std::string& text, const std::string& source = "<input>",
    double mass_tol = kMassTol);
JointStrategy parse_joint_strategy(const std::string& text,
                                   const std::string& source = "<input>",
                                   double mass_tol = kMassTol);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ceq

#endif  // CEQ_GAME_IO_HPP_
