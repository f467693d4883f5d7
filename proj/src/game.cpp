#include "qwalk/game.hpp"

#include <stdexcept>

namespace qwalk {

void validate(const GameConfig& cfg) {
  if (cfg.steps < 1) throw std::invalid_argument("steps must be at least 1");
  require_finite(cfg.theta, "theta");
  if (!(cfg.eq_tolerance > 0.0) || cfg.eq_tolerance > 1e-6) {
    throw std::invalid_argument("eq_tolerance must lie in (0, 1e-6]");
  }
  if (!(cfg.min_increment > 0.0) || !(cfg.min_increment < kHalfPi)) {
    throw std::invalid_argument("min_increment must lie in (0, pi/2)");
  }
}

void validate(const PlayerCoins& coins) {
  require_finite(coins.xi_A, "xi_A");
  require_finite(coins.zeta_B, "zeta_B");
  if (coins.xi_A < 0.0 || coins.xi_A > kHalfPi || coins.zeta_B < 0.0 ||
      coins.zeta_B > kHalfPi) {
    throw std::invalid_argument("player coin parameters must lie in [0, pi/2]");
  }
}

GameOutcome decide_winner(const SideProbabilities& sp, const GameConfig& cfg) {
  validate(cfg);
  GameOutcome out;
  out.p_left = sp.left;
  out.p_right = sp.right;
  out.p_origin = sp.origin;
  out.margin = sp.right - sp.left;
  if (out.margin > cfg.eq_tolerance) {
    out.winner = Winner::A;
  } else if (-out.margin > cfg.eq_tolerance) {
    out.winner = Winner::B;
  } else {
    out.winner = Winner::Joint;
  }
  return out;
}

Mat2 coin_of(Player player, const PlayerCoins& coins, double theta) {
  return player == Player::A ? build_coin({coins.xi_A, theta, 0.0})
                             : build_coin({0.0, theta, coins.zeta_B});
}

CoinProgram bind_program(const dsl::StepProgram& program, const PlayerCoins& coins,
                         double theta) {
  validate(coins);
  const Mat2 a = coin_of(Player::A, coins, theta);
  const Mat2 b = coin_of(Player::B, coins, theta);
  CoinProgram bound;
  bound.reserve(program.size());
  for (const dsl::Step& step : program) {
    CoinStep coin_step;
    coin_step.reserve(step.size());
    for (dsl::Tag tag : step) coin_step.push_back(tag == dsl::Tag::A ? a : b);
    bound.push_back(std::move(coin_step));
  }
  return bound;
}

namespace {

GameOutcome run_bound(const CoinProgram& program, const GameConfig& cfg) {
  const int t = static_cast<int>(program.size());
  const WalkState st = evolve(t, InitialState{}, program);
  return decide_winner(side_probabilities(distribution(st)), cfg);
}

}  // namespace

GameOutcome play_program(const dsl::StepProgram& program, const PlayerCoins& coins,
                         const GameConfig& cfg) {
  validate(cfg);
  if (program.empty()) throw std::invalid_argument("strategy program is empty");
  return run_bound(bind_program(program, coins, cfg.theta), cfg);
}

GameOutcome play_solo(Player player, const PlayerCoins& coins, const GameConfig& cfg) {
  validate(cfg);
  validate(coins);
  const CoinProgram program(cfg.steps, CoinStep{coin_of(player, coins, cfg.theta)});
  return run_bound(program, cfg);
}

GameOutcome play_alternating(Player first, const PlayerCoins& coins, const GameConfig& cfg) {
  validate(cfg);
  validate(coins);
  const Mat2 first_coin = coin_of(first, coins, cfg.theta);
  const Mat2 second_coin =
      coin_of(first == Player::A ? Player::B : Player::A, coins, cfg.theta);
  CoinProgram program;
  program.reserve(cfg.steps);
  for (int i = 0; i < cfg.steps; ++i) {
    program.push_back(CoinStep{i % 2 == 0 ? first_coin : second_coin});
  }
  return run_bound(program, cfg);
}

GameOutcome play_composite(Order order, const PlayerCoins& coins, const GameConfig& cfg) {
  validate(cfg);
  validate(coins);
  const Mat2 a = coin_of(Player::A, coins, cfg.theta);
  const Mat2 b = coin_of(Player::B, coins, cfg.theta);
  const CoinStep step = order == Order::BA ? CoinStep{a, b} : CoinStep{b, a};
  const CoinProgram program(cfg.steps, step);
  return run_bound(program, cfg);
}

double asymmetry_margin(Player player, double angle, const GameConfig& cfg) {
  validate(cfg);
  if (!(angle > 0.0) || angle > kHalfPi) {
    throw std::invalid_argument("angle must lie in (0, pi/2]");
  }
  const PlayerCoins coins = player == Player::A ? PlayerCoins{angle, 0.0}
                                                : PlayerCoins{0.0, angle};
  const GameOutcome out = play_solo(player, coins, cfg);
  return std::abs(out.p_left - out.p_right);
}

double epsilon_strategy(const GameConfig& cfg) {
  validate(cfg);
  return cfg.min_increment;
}

WinnerRegionMap sweep_winner_region(Order order, const GameConfig& cfg, int resolution) {
  validate(cfg);
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  WinnerRegionMap map;
  map.resolution = resolution;
  map.axis.resize(resolution);
  for (int k = 0; k < resolution; ++k) {
    map.axis[k] = k == resolution - 1 ? kHalfPi : kHalfPi * k / (resolution - 1);
  }
  const int cells = resolution * resolution;
  map.margin.assign(cells, 0.0);
  map.winner.assign(cells, Winner::Joint);
  const int workers = thread_cap();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int cell = 0; cell < cells; ++cell) {
    const PlayerCoins coins{map.axis[cell / resolution], map.axis[cell % resolution]};
    const GameOutcome out = play_composite(order, coins, cfg);
    map.margin[cell] = out.margin;
    map.winner[cell] = out.winner;
  }
  return map;
}

}  // namespace qwalk
