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
//
// Command-line front end: game generation, equilibrium condition checks, the
// closed-form entropy solver, LP feasibility/optimization over the CE
// polytope, and the sweep/timing experiment runners.
//
// Exit codes: 0 success, 1 failed condition check or failed solve,
// 2 malformed input.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ceq/entropy.hpp"
#include "ceq/equilibria.hpp"
#include "ceq/game.hpp"
#include "ceq/game_io.hpp"
#include "ceq/lp.hpp"
#include "ceq/random_game.hpp"
#include "ceq/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConditionFailed = 1;
constexpr int kExitInputError = 2;

struct GlobalOptions {
  double tol = ceq::kConditionTol;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "default";
  bool verbose = false;
};

void emit(const GlobalOptions& opts, std::string text) {
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    ceq::write_file(opts.out_path, text);
  }
}

void require_format(const GlobalOptions& opts,
                    const std::vector<std::string>& allowed) {
  if (opts.format == "default") return;
  for (const std::string& f : allowed) {
    if (opts.format == f) return;
  }
  throw ceq::ParseError("unsupported --format '" + opts.format +
                        "' for this subcommand");
}

std::vector<int> parse_size(const std::string& text) {
  std::vector<int> size;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, 'x')) {
    try {
      size.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ceq::ParseError("bad size component '" + part + "' in '" + text +
                            "'");
    }
  }
  if (size.size() < 2) {
    throw ceq::ParseError("size '" + text + "' needs at least two players");
  }
  return size;
}

std::vector<std::vector<int>> parse_sizes(const std::string& text) {
  std::vector<std::vector<int>> sizes;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) sizes.push_back(parse_size(part));
  if (sizes.empty()) throw ceq::ParseError("empty size list");
  return sizes;
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    try {
      values.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw ceq::ParseError("bad " + what + " value '" + part + "'");
    }
  }
  if (values.empty()) throw ceq::ParseError("empty " + what + " list");
  return values;
}

ceq::CorrelatedStrategy load_correlated(const std::string& spec,
                                        const ceq::NormalFormGame& game) {
  if (spec == "uniform") {
    const double mass =
        1.0 / static_cast<double>(game.num_joint_actions());
    return ceq::CorrelatedStrategy(
        std::vector<double>(game.num_joint_actions(), mass));
  }
  return ceq::parse_correlated_strategy(ceq::read_file(spec), spec);
}

ceq::JointStrategy load_joint(const std::string& spec,
                              const ceq::NormalFormGame& game) {
  if (spec == "uniform") {
    std::vector<std::vector<double>> probs;
    for (int i = 0; i < game.num_players(); ++i) {
      probs.emplace_back(game.action_count(i),
                         1.0 / static_cast<double>(game.action_count(i)));
    }
    return ceq::JointStrategy(std::move(probs));
  }
  return ceq::parse_joint_strategy(ceq::read_file(spec), spec);
}

ceq::RegularizationWeights weights_for(const std::vector<double>& lambdas,
                                       const ceq::NormalFormGame& game) {
  if (lambdas.size() == 1) {
    return ceq::RegularizationWeights::uniform(game.num_players(), lambdas[0]);
  }
  if (static_cast<int>(lambdas.size()) != game.num_players()) {
    throw ceq::ParseError("--lambda needs one value or one per player");
  }
  return ceq::RegularizationWeights(lambdas);
}

nlohmann::json records_json(const std::vector<ceq::SweepRecord>& records) {
  nlohmann::json array = nlohmann::json::array();
  for (const ceq::SweepRecord& r : records) {
    nlohmann::json j;
    j["game_id"] = r.game_id;
    j["seed"] = r.seed;
    j["n_players"] = r.num_players;
    j["actions"] = r.action_counts;
    j["lambda"] = r.lambda;
    j["eps_empirical"] = r.eps_empirical;
    j["eps_bound"] = r.eps_bound;
    j["t_closed_form_s"] = r.t_closed_form_s;
    if (r.t_lp_s) j["t_lp_s"] = *r.t_lp_s;
    array.push_back(std::move(j));
  }
  return array;
}

int run(int argc, char** argv) {
  CLI::App app{"correlated-equilibrium toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--tol", global.tol, "condition-check tolerance")
      ->capture_default_str();
  app.add_option("--seed", global.seed, "random seed")->capture_default_str();
  app.add_option("--out", global.out_path, "write output to this path");
  app.add_option("--format", global.format, "output format (json|csv)");
  app.add_flag("--verbose", global.verbose, "include full deviation entries");

  int exit_code = kExitOk;

  // gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a random game");
  std::string gen_actions = "2x2";
  int gen_players = 0;
  gen->add_option("--actions", gen_actions,
                  "action counts, e.g. 3x3x3 for three players")
      ->capture_default_str();
  gen->add_option("--players", gen_players,
                  "optional cross-check of the player count");
  gen->callback([&] {
    require_format(global, {"json"});
    const std::vector<int> size = parse_size(gen_actions);
    if (gen_players > 0 && gen_players != static_cast<int>(size.size())) {
      throw ceq::ParseError("--players disagrees with --actions");
    }
    auto engine = ceq::RngSpec{global.seed}.engine(0);
    emit(global, ceq::to_json(ceq::gen_random_game(size, engine)));
  });

  // check-ce -----------------------------------------------------------
  auto* check_ce_cmd =
      app.add_subcommand("check-ce", "check the correlated equilibrium "
                                     "conditions of a strategy");
  std::string ce_game_path;
  std::string ce_strategy = "uniform";
  check_ce_cmd->add_option("game", ce_game_path, "game JSON file")->required();
  check_ce_cmd->add_option("--strategy", ce_strategy,
                           "'uniform' or a strategy JSON file")
      ->capture_default_str();
  check_ce_cmd->callback([&] {
    require_format(global, {"json"});
    const ceq::NormalFormGame game = ceq::load_game_file(ce_game_path);
    const ceq::DeviationReport report =
        ceq::check_ce(game, load_correlated(ce_strategy, game), global.tol);
    emit(global, ceq::to_json(report, global.verbose));
    if (!report.holds()) exit_code = kExitConditionFailed;
  });

  // check-ne -----------------------------------------------------------
  auto* check_ne_cmd = app.add_subcommand(
      "check-ne", "check the Nash conditions of a joint strategy");
  std::string ne_game_path;
  std::string ne_strategy = "uniform";
  check_ne_cmd->add_option("game", ne_game_path, "game JSON file")->required();
  check_ne_cmd->add_option("--strategy", ne_strategy,
                           "'uniform' or a joint-strategy JSON file")
      ->capture_default_str();
  check_ne_cmd->callback([&] {
    require_format(global, {"json"});
    const ceq::NormalFormGame game = ceq::load_game_file(ne_game_path);
    const ceq::DeviationReport report =
        ceq::check_nash(game, load_joint(ne_strategy, game), global.tol);
    emit(global, ceq::to_json(report, global.verbose));
    if (!report.holds()) exit_code = kExitConditionFailed;
  });

  // solve-entropy --------------------------------------------------------
  auto* solve_entropy_cmd = app.add_subcommand(
      "solve-entropy", "closed-form entropy-regularized solution");
  std::string entropy_game_path;
  std::string entropy_lambda = "1";
  solve_entropy_cmd->add_option("game", entropy_game_path, "game JSON file")
      ->required();
  solve_entropy_cmd
      ->add_option("--lambda", entropy_lambda,
                   "regularization weight, one value or per-player list")
      ->capture_default_str();
  solve_entropy_cmd->callback([&] {
    require_format(global, {"json"});
    const ceq::NormalFormGame game = ceq::load_game_file(entropy_game_path);
    const auto lambda =
        weights_for(parse_double_list(entropy_lambda, "lambda"), game);
    const ceq::EntropySolution solution = ceq::solve_closed_form(game, lambda);
    const ceq::CertificationResult cert =
        ceq::certify(game, solution, global.tol);
    nlohmann::json j = nlohmann::json::parse(ceq::to_json(solution));
    j["empirical"] = cert.empirical;
    j["holds"] = cert.holds;
    emit(global, j.dump());
  });

  // solve-lp -------------------------------------------------------------
  auto* solve_lp_cmd = app.add_subcommand(
      "solve-lp", "feasible point of the CE polytope, or minimize an "
                  "objective over it");
  std::string lp_game_path;
  std::string lp_objective = "none";
  std::string lp_dump_path;
  solve_lp_cmd->add_option("game", lp_game_path, "game JSON file")->required();
  solve_lp_cmd
      ->add_option("--objective", lp_objective,
                   "'none', 'total' (social cost), or a JSON array file")
      ->capture_default_str();
  solve_lp_cmd->add_option("--lp-dump", lp_dump_path,
                           "write the LP in plain text to this path");
  solve_lp_cmd->callback([&] {
    require_format(global, {"json"});
    const ceq::NormalFormGame game = ceq::load_game_file(lp_game_path);
    ceq::LinearProgram lp = ceq::build_ce_polytope(game);
    if (lp_objective == "total") {
      lp.objective.assign(lp.num_vars, 0.0);
      for (int i = 0; i < game.num_players(); ++i) {
        for (std::int64_t a = 0; a < game.num_joint_actions(); ++a) {
          lp.objective[a] += game.cost(i, a);
        }
      }
    } else if (lp_objective != "none") {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(ceq::read_file(lp_objective));
      } catch (const nlohmann::json::parse_error& e) {
        throw ceq::ParseError(lp_objective + ": " + e.what());
      }
      if (!j.is_array() ||
          static_cast<std::int64_t>(j.size()) != lp.num_vars) {
        throw ceq::ParseError(lp_objective +
                              ": objective must be an array of length A");
      }
      lp.objective = j.get<std::vector<double>>();
    }
    if (!lp_dump_path.empty()) {
      ceq::write_file(lp_dump_path, ceq::to_text(lp));
    }
    const ceq::SolveOutcome outcome = lp.objective.empty()
                                          ? ceq::feasible_point(lp)
                                          : ceq::minimize_linear(lp);
    nlohmann::json j;
    j["status"] = ceq::to_string(outcome.status);
    j["objective"] = outcome.objective;
    j["iterations"] = outcome.iterations;
    j["pivots"] = outcome.pivots;
    j["residual"] = outcome.residual;
    if (!outcome.y.empty()) j["y"] = outcome.y;
    emit(global, j.dump());
    if (outcome.status != ceq::SolveStatus::kFeasible &&
        outcome.status != ceq::SolveStatus::kOptimal) {
      exit_code = kExitConditionFailed;
    }
  });

  // sweep ----------------------------------------------------------------
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "random-game lambda sweep with certificates");
  ceq::SweepConfig sweep_config;
  std::string sweep_sizes_text;
  std::string sweep_lambdas_text;
  std::string sweep_summary_path;
  std::vector<std::string> sweep_fixture_paths;
  bool sweep_with_lp = false;
  sweep_cmd->add_option("--k", sweep_config.games_per_size,
                        "games per size")
      ->capture_default_str();
  sweep_cmd->add_option("--sizes", sweep_sizes_text,
                        "comma list of sizes, e.g. 2x2,5x5,2x2x2");
  sweep_cmd->add_option("--lambdas", sweep_lambdas_text,
                        "comma list of regularization weights");
  sweep_cmd->add_flag("--with-lp", sweep_with_lp,
                      "also time LP feasibility per game");
  sweep_cmd->add_option("--summary", sweep_summary_path,
                        "write per-lambda aggregate CSV to this path");
  sweep_cmd->add_option("--game", sweep_fixture_paths,
                        "sweep these game files instead of random games");
  sweep_cmd->callback([&] {
    require_format(global, {"csv", "json"});
    sweep_config.seed = global.seed;
    sweep_config.time_lp = sweep_with_lp;
    if (!sweep_sizes_text.empty()) {
      sweep_config.sizes = parse_sizes(sweep_sizes_text);
    }
    if (!sweep_lambdas_text.empty()) {
      sweep_config.lambdas = parse_double_list(sweep_lambdas_text, "lambda");
    }
    for (const std::string& path : sweep_fixture_paths) {
      sweep_config.fixture_games.push_back(ceq::load_game_file(path));
    }
    const std::vector<ceq::SweepRecord> records = ceq::run_sweep(sweep_config);
    if (global.format == "json") {
      emit(global, records_json(records).dump());
    } else {
      emit(global, ceq::sweep_csv(records));
    }
    if (!sweep_summary_path.empty()) {
      const auto summary = ceq::summarize_sweep(records);
      ceq::write_file(sweep_summary_path, ceq::summary_csv(summary));
    }
  });

  // bench ----------------------------------------------------------------
  auto* bench_cmd = app.add_subcommand(
      "bench", "closed form vs LP feasibility timing");
  ceq::TimingConfig bench_config;
  std::string bench_sizes_text;
  bench_cmd->add_option("--sizes", bench_sizes_text,
                        "comma list of sizes, e.g. 2x2,3x3x3");
  bench_cmd->add_option("--reps", bench_config.reps, "repetitions per game")
      ->capture_default_str();
  bench_cmd->add_option("--games-per-size", bench_config.games_per_size,
                        "games per size")
      ->capture_default_str();
  bench_cmd->callback([&] {
    require_format(global, {"csv"});
    bench_config.seed = global.seed;
    if (!bench_sizes_text.empty()) {
      bench_config.sizes = parse_sizes(bench_sizes_text);
    } else {
      // Dense-tableau memory grows quickly; keep the LP side at moderate
      // sizes by default.
      bench_config.sizes = {{2, 2}, {5, 5}, {10, 10}, {2, 2, 2}, {3, 3, 3}};
    }
    emit(global, ceq::timing_csv(ceq::bench_timing(bench_config)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ceq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
