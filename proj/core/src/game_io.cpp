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

#include "ceq/game_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ceq {

namespace {

using nlohmann::json;

// nlohmann reports byte offsets; convert to a line/column diagnostic.
std::string line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": JSON parse error at " +
                     line_of_offset(text, e.byte) + ": " + e.what());
  }
}

double finite_number(const json& node, const std::string& source,
                     const std::string& field) {
  if (!node.is_number()) {
    throw ParseError(source + ": field " + field + " must be a finite number");
  }
  const double value = node.get<double>();
  if (!std::isfinite(value)) {
    throw ParseError(source + ": field " + field + " is not finite");
  }
  return value;
}

std::vector<double> number_array(const json& node, const std::string& source,
                                 const std::string& field) {
  if (!node.is_array()) {
    throw ParseError(source + ": field " + field + " must be an array");
  }
  std::vector<double> values;
  values.reserve(node.size());
  for (std::size_t k = 0; k < node.size(); ++k) {
    values.push_back(finite_number(node[k], source,
                                   field + "[" + std::to_string(k) + "]"));
  }
  return values;
}

}  // namespace

NormalFormGame parse_game(const std::string& text, const std::string& source) {
  const json j = parse_json(text, source);
  if (!j.is_object()) {
    throw ParseError(source + ": top-level value must be an object");
  }
  for (const char* field : {"num_players", "actions", "costs"}) {
    if (!j.contains(field)) {
      throw ParseError(source + ": missing field " + std::string(field));
    }
  }
  if (!j["num_players"].is_number_integer()) {
    throw ParseError(source + ": field num_players must be an integer");
  }
  const std::int64_t num_players = j["num_players"].get<std::int64_t>();
  if (!j["actions"].is_array()) {
    throw ParseError(source + ": field actions must be an array");
  }
  std::vector<int> action_counts;
  for (std::size_t k = 0; k < j["actions"].size(); ++k) {
    const json& node = j["actions"][k];
    if (!node.is_number_integer()) {
      throw ParseError(source + ": field actions[" + std::to_string(k) +
                       "] must be an integer");
    }
    action_counts.push_back(node.get<int>());
  }
  if (static_cast<std::int64_t>(action_counts.size()) != num_players) {
    throw ParseError(source + ": field actions has " +
                     std::to_string(action_counts.size()) +
                     " entries but num_players is " +
                     std::to_string(num_players));
  }
  if (!j["costs"].is_array() ||
      static_cast<std::int64_t>(j["costs"].size()) != num_players) {
    throw ParseError(source + ": field costs needs one array per player");
  }
  std::vector<std::vector<double>> costs;
  for (std::size_t i = 0; i < j["costs"].size(); ++i) {
    costs.push_back(number_array(j["costs"][i], source,
                                 "costs[" + std::to_string(i) + "]"));
  }
  try {
    return NormalFormGame(std::move(action_counts), std::move(costs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
}

NormalFormGame load_game(std::istream& in, const std::string& source) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str(), source);
}

NormalFormGame load_game_file(const std::string& path) {
  return parse_game(read_file(path), path);
}

std::string to_json(const NormalFormGame& game) {
  json j;
  j["num_players"] = game.num_players();
  j["actions"] = game.action_counts();
  json costs = json::array();
  for (int i = 0; i < game.num_players(); ++i) costs.push_back(game.costs(i));
  j["costs"] = std::move(costs);
  return j.dump();
}

CorrelatedStrategy parse_correlated_strategy(const std::string& text,
                                             const std::string& source,
                                             double mass_tol) {
  const json j = parse_json(text, source);
  const json* node = &j;
  if (j.is_object()) {
    if (!j.contains("y")) {
      throw ParseError(source + ": strategy object must carry field y");
    }
    node = &j["y"];
  }
  try {
    return CorrelatedStrategy(number_array(*node, source, "y"), mass_tol);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
}

JointStrategy parse_joint_strategy(const std::string& text,
                                   const std::string& source,
                                   double mass_tol) {
  const json j = parse_json(text, source);
  const json* node = &j;
  if (j.is_object()) {
    if (!j.contains("x")) {
      throw ParseError(source + ": strategy object must carry field x");
    }
    node = &j["x"];
  }
  if (!node->is_array()) {
    throw ParseError(source + ": field x must be an array of arrays");
  }
  std::vector<std::vector<double>> probs;
  for (std::size_t i = 0; i < node->size(); ++i) {
    probs.push_back(
        number_array((*node)[i], source, "x[" + std::to_string(i) + "]"));
  }
  try {
    return JointStrategy(std::move(probs), mass_tol);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open file for writing");
  out << contents;
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace ceq
