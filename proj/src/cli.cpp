#include "qwalk/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qwalk/angles.hpp"
#include "qwalk/emit.hpp"
#include "qwalk/figures.hpp"
#include "qwalk/game.hpp"
#include "qwalk/strategy.hpp"
#include "qwalk/verify.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

namespace fs = std::filesystem;

// Every value-carrying flag is declared here so a JSON config can mirror it.
// Flags given on the command line win over config values, which win over
// these defaults.
struct Options {
  int steps = 100;
  std::string theta = "pi/4";
  std::string xi = "0";
  std::string zeta = "0";
  std::string delta = "pi/2";
  std::string phi = "pi/2";
  std::string strategy;
  std::string order = "BA";
  std::string output;
  std::string format = "csv";
  std::string outdir = "figures";
  int resolution = 25;
  double eq_tolerance = 1e-9;
  double min_increment = 0.01;
  long seed = 1;
  std::string config;
};

struct OptionHandles {
  std::map<std::string, CLI::Option*> by_key;
};

void add_common_angle_flags(CLI::App* cmd, Options& opt, OptionHandles& handles) {
  handles.by_key["theta"] =
      cmd->add_option("--theta", opt.theta, "shared coin angle (angle literal)");
  handles.by_key["xi"] = cmd->add_option("--xi", opt.xi, "xi parameter (angle literal)");
  handles.by_key["zeta"] =
      cmd->add_option("--zeta", opt.zeta, "zeta parameter (angle literal)");
}

void add_config_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config, "JSON file mirroring the flags of this command");
}

void add_output_flag(CLI::App* cmd, Options& opt, OptionHandles& handles) {
  handles.by_key["output"] =
      cmd->add_option("--output,-o", opt.output, "write the primary payload here");
}

// Applies config values for flags the user did not pass. Unknown keys are errors.
void merge_config(Options& opt, const OptionHandles& handles) {
  if (opt.config.empty()) return;
  std::ifstream in(opt.config);
  if (!in) throw std::runtime_error("cannot read config file " + opt.config);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config file " + opt.config + ": " + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config file must hold a JSON object");

  const auto angle_text = [](const nlohmann::json& v, const std::string& key) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return format_real(v.get<double>());
    throw std::invalid_argument("config key '" + key + "' must be a string or number");
  };

  for (const auto& [key, value] : doc.items()) {
    const auto handle = handles.by_key.find(key);
    if (handle == handles.by_key.end()) {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
    if (handle->second != nullptr && handle->second->count() > 0) continue;  // flag wins

    if (key == "steps") {
      opt.steps = value.get<int>();
    } else if (key == "resolution") {
      opt.resolution = value.get<int>();
    } else if (key == "eq-tolerance") {
      opt.eq_tolerance = value.get<double>();
    } else if (key == "min-increment") {
      opt.min_increment = value.get<double>();
    } else if (key == "seed") {
      opt.seed = value.get<long>();
    } else if (key == "theta") {
      opt.theta = angle_text(value, key);
    } else if (key == "xi") {
      opt.xi = angle_text(value, key);
    } else if (key == "zeta") {
      opt.zeta = angle_text(value, key);
    } else if (key == "delta") {
      opt.delta = angle_text(value, key);
    } else if (key == "phi") {
      opt.phi = angle_text(value, key);
    } else if (key == "strategy") {
      opt.strategy = value.get<std::string>();
    } else if (key == "order") {
      opt.order = value.get<std::string>();
    } else if (key == "output") {
      opt.output = value.get<std::string>();
    } else if (key == "format") {
      opt.format = value.get<std::string>();
    } else if (key == "outdir") {
      opt.outdir = value.get<std::string>();
    }
  }
}

Order parse_order(const std::string& text) {
  if (text == "AB") return Order::AB;
  if (text == "BA") return Order::BA;
  throw std::invalid_argument("order must be AB or BA");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

int cmd_walk(const Options& opt) {
  if (opt.steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (opt.format != "csv" && opt.format != "json") {
    throw std::invalid_argument("format must be csv or json");
  }
  const CoinParams params{parse_angle(opt.xi), parse_angle(opt.theta), parse_angle(opt.zeta)};
  const InitialState start{parse_angle(opt.delta), parse_angle(opt.phi)};
  const CoinProgram program(opt.steps, CoinStep{build_coin(params)});
  const WalkState st = evolve(opt.steps, start, program);
  const Distribution dist = distribution(st);
  const SideProbabilities sides = side_probabilities(dist);
  const std::string summary = walk_summary_json(dist.t, sides, moments(dist));

  const auto emit_payload = [&](std::ostream& out) {
    if (opt.format == "csv") {
      write_distribution_csv(out, dist);
    } else {
      out << distribution_json(dist);
    }
  };

  if (opt.output.empty()) {
    emit_payload(std::cout);
    std::cout << summary;
  } else {
    auto out = open_output(opt.output);
    emit_payload(out);
    fs::path summary_path(opt.output);
    summary_path.replace_extension(".summary.json");
    open_output(summary_path.string()) << summary;
    std::cout << summary;
  }
  return 0;
}

int cmd_game(const Options& opt) {
  if (opt.strategy.empty()) {
    throw std::invalid_argument("game requires --strategy (or a config value)");
  }
  const dsl::StepProgram program = dsl::expand(dsl::parse(opt.strategy));
  const PlayerCoins coins{parse_angle(opt.xi), parse_angle(opt.zeta)};
  GameConfig cfg;
  cfg.steps = static_cast<int>(dsl::program_length(program));
  cfg.theta = parse_angle(opt.theta);
  cfg.eq_tolerance = opt.eq_tolerance;
  cfg.min_increment = opt.min_increment;
  const GameOutcome out = play_program(program, coins, cfg);
  const std::string payload = game_outcome_json(out, dsl::program_length(program), opt.strategy);
  if (opt.output.empty()) {
    std::cout << payload;
  } else {
    open_output(opt.output) << payload;
    std::cout << payload;
  }
  return 0;
}

int cmd_sweep(const Options& opt) {
  GameConfig cfg;
  cfg.steps = opt.steps;
  cfg.theta = parse_angle(opt.theta);
  cfg.eq_tolerance = opt.eq_tolerance;
  cfg.min_increment = opt.min_increment;
  const WinnerRegionMap map = sweep_winner_region(parse_order(opt.order), cfg, opt.resolution);
  if (opt.output.empty()) {
    write_sweep_csv(std::cout, map);
  } else {
    auto out = open_output(opt.output);
    write_sweep_csv(out, map);
  }
  return 0;
}

int cmd_figure(const std::string& which, const Options& opt) {
  std::vector<fs::path> written;
  if (which == "fig2") {
    written = emit_fig2(opt.outdir, opt.steps);
  } else {
    GameConfig cfg;
    cfg.steps = opt.steps;
    cfg.theta = parse_angle(opt.theta);
    cfg.eq_tolerance = opt.eq_tolerance;
    cfg.min_increment = opt.min_increment;
    written = emit_fig3(opt.outdir, cfg, opt.resolution);
  }
  for (const fs::path& path : written) std::cout << path.string() << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"discrete-time quantum walk simulator and coin-game toolkit"};
  app.require_subcommand(1);

  Options walk_opt, game_opt, sweep_opt, figure_opt;
  OptionHandles walk_handles, game_handles, sweep_handles, figure_handles;
  std::string figure_which;

  CLI::App* walk = app.add_subcommand("walk", "run one walk and emit its distribution");
  walk_handles.by_key["steps"] =
      walk->add_option("--steps", walk_opt.steps, "number of steps")->check(CLI::NonNegativeNumber);
  add_common_angle_flags(walk, walk_opt, walk_handles);
  walk_handles.by_key["delta"] =
      walk->add_option("--delta", walk_opt.delta, "start state polar angle (angle literal)");
  walk_handles.by_key["phi"] =
      walk->add_option("--phi", walk_opt.phi, "start state relative phase (angle literal)");
  walk_handles.by_key["format"] =
      walk->add_option("--format", walk_opt.format, "payload format: csv or json");
  add_output_flag(walk, walk_opt, walk_handles);
  add_config_flag(walk, walk_opt);

  CLI::App* game = app.add_subcommand("game", "adjudicate one two-player game");
  game_handles.by_key["strategy"] =
      game->add_option("--strategy", game_opt.strategy, "strategy program text");
  add_common_angle_flags(game, game_opt, game_handles);
  game_handles.by_key["eq-tolerance"] = game->add_option(
      "--eq-tolerance", game_opt.eq_tolerance, "joint-win threshold on |P_L-P_R|");
  game_handles.by_key["min-increment"] = game->add_option(
      "--min-increment", game_opt.min_increment, "smallest allowed nonzero parameter");
  add_output_flag(game, game_opt, game_handles);
  add_config_flag(game, game_opt);

  CLI::App* sweep = app.add_subcommand("sweep", "map winners over the parameter square");
  sweep_handles.by_key["steps"] =
      sweep->add_option("--steps", sweep_opt.steps, "steps per cell")->check(CLI::PositiveNumber);
  sweep_handles.by_key["order"] =
      sweep->add_option("--order", sweep_opt.order, "within-step coin order: AB or BA");
  sweep_handles.by_key["resolution"] =
      sweep->add_option("--resolution", sweep_opt.resolution, "grid points per axis")
          ->check(CLI::Range(2, 4096));
  sweep_handles.by_key["theta"] =
      sweep->add_option("--theta", sweep_opt.theta, "shared coin angle (angle literal)");
  sweep_handles.by_key["eq-tolerance"] = sweep->add_option(
      "--eq-tolerance", sweep_opt.eq_tolerance, "joint-win threshold on |P_L-P_R|");
  add_output_flag(sweep, sweep_opt, sweep_handles);
  add_config_flag(sweep, sweep_opt);

  CLI::App* figure = app.add_subcommand("figure", "emit a reproducible data bundle");
  figure->add_option("which", figure_which, "bundle name: fig2 or fig3")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3"}));
  figure_handles.by_key["outdir"] =
      figure->add_option("--outdir", figure_opt.outdir, "directory for the bundle files");
  figure_handles.by_key["steps"] =
      figure->add_option("--steps", figure_opt.steps, "steps per panel or cell")
          ->check(CLI::PositiveNumber);
  figure_handles.by_key["resolution"] =
      figure->add_option("--resolution", figure_opt.resolution, "sweep grid points per axis")
          ->check(CLI::Range(2, 4096));
  figure_handles.by_key["theta"] =
      figure->add_option("--theta", figure_opt.theta, "sweep coin angle (angle literal)");
  figure_handles.by_key["eq-tolerance"] = figure->add_option(
      "--eq-tolerance", figure_opt.eq_tolerance, "sweep joint-win threshold");
  add_config_flag(figure, figure_opt);

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand(walk)) {
      merge_config(walk_opt, walk_handles);
      return cmd_walk(walk_opt);
    }
    if (app.got_subcommand(game)) {
      merge_config(game_opt, game_handles);
      return cmd_game(game_opt);
    }
    if (app.got_subcommand(sweep)) {
      merge_config(sweep_opt, sweep_handles);
      return cmd_sweep(sweep_opt);
    }
    if (app.got_subcommand(figure)) {
      merge_config(figure_opt, figure_handles);
      return cmd_figure(figure_which, figure_opt);
    }
    if (app.got_subcommand(verify)) {
      return run_acceptance(std::cout) == 0 ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace qwalk
