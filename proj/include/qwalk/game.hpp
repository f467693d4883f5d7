#pragma once

#include <vector>

#include "qwalk/strategy.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class Player { A, B };
enum class Order { AB, BA };
enum class Winner { A, B, Joint };

// Rules shared by every play: a win needs |P_R - P_L| above eq_tolerance,
// theta is common to both players, min_increment is the smallest nonzero
// parameter the rules allow a player to pick.
struct GameConfig {
  int steps = 100;
  double theta = kPi / 4.0;
  double eq_tolerance = 1e-9;
  double min_increment = 0.01;
};

void validate(const GameConfig& cfg);

// Player A plays build_coin(xi_A, theta, 0); player B plays build_coin(0, theta, zeta_B).
// Both parameters stay within [0, pi/2].
struct PlayerCoins {
  double xi_A = 0.0;
  double zeta_B = 0.0;
};

void validate(const PlayerCoins& coins);

struct GameOutcome {
  double p_left = 0.0;
  double p_right = 0.0;
  double p_origin = 0.0;
  double margin = 0.0;  // p_right - p_left
  Winner winner = Winner::Joint;
};

// margin > eq_tolerance: A wins; margin < -eq_tolerance: B wins; else Joint.
GameOutcome decide_winner(const SideProbabilities& sp, const GameConfig& cfg);

Mat2 coin_of(Player player, const PlayerCoins& coins, double theta);

// Expands A/B tags into coin matrices, preserving within-step order.
CoinProgram bind_program(const dsl::StepProgram& program, const PlayerCoins& coins,
                         double theta);

// Runs a bound program from the standard start state; the step count is the
// program length (cfg.steps is ignored here).
GameOutcome play_program(const dsl::StepProgram& program, const PlayerCoins& coins,
                         const GameConfig& cfg);

GameOutcome play_solo(Player player, const PlayerCoins& coins, const GameConfig& cfg);

// Single coins on alternate steps, the starter's coin first.
GameOutcome play_alternating(Player first, const PlayerCoins& coins, const GameConfig& cfg);

// Both coins within every step. Order BA applies A's coin first (net matrix
// composite_BA); order AB applies B's coin first (net matrix composite_AB).
GameOutcome play_composite(Order order, const PlayerCoins& coins, const GameConfig& cfg);

// |P_L - P_R| after cfg.steps solo steps at the given parameter; requires
// angle in (0, pi/2].
double asymmetry_margin(Player player, double angle, const GameConfig& cfg);

// The recommended pick when players cannot consult: the smallest allowed
// nonzero parameter.
double epsilon_strategy(const GameConfig& cfg);

// Row-major over (xi outer, zeta inner); axis spans [0, pi/2] uniformly.
struct WinnerRegionMap {
  int resolution = 0;
  std::vector<double> axis;
  std::vector<double> margin;   // p_right - p_left per cell
  std::vector<Winner> winner;

  int cell(int i, int j) const { return i * resolution + j; }
};

WinnerRegionMap sweep_winner_region(Order order, const GameConfig& cfg, int resolution);

}  // namespace qwalk
