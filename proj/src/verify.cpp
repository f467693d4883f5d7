#include "qwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qwalk/figures.hpp"
#include "qwalk/game.hpp"
#include "qwalk/strategy.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

struct Report {
  std::ostream& out;
  int failures = 0;

  void line(int id, bool pass, const std::string& name, const std::string& detail) {
    if (!pass) ++failures;
    char head[16];
    std::snprintf(head, sizeof head, "[%2d] ", id);
    out << head << (pass ? "PASS  " : "FAIL  ") << name << ": " << detail << "\n";
  }
};

CoinProgram repeat_coin(const Mat2& coin, int t) { return CoinProgram(t, CoinStep{coin}); }

double max_abs_diff(const WalkState& a, const WalkState& b) {
  double worst = 0.0;
  for (int x = -a.t_max; x <= a.t_max; ++x) {
    worst = std::max(worst, std::abs(a.up[a.index(x)] - b.up[b.index(x)]));
    worst = std::max(worst, std::abs(a.down[a.index(x)] - b.down[b.index(x)]));
  }
  return worst;
}

// 1. One-step side probabilities against the closed form
//    p(-1) = (1 + sin(2 theta) sin(xi - zeta)) / 2.
void check_one_step_closed_form(Report& rep) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const CoinParams p{angle(rng), angle(rng), angle(rng)};
    const WalkState st = evolve(1, InitialState{}, repeat_coin(build_coin(p), 1));
    const Distribution d = distribution(st);
    const double bias = std::sin(2 * p.theta) * std::sin(p.xi - p.zeta);
    worst = std::max(worst, std::abs(d.p[0] - 0.5 * (1 + bias)));
    worst = std::max(worst, std::abs(d.p[2] - 0.5 * (1 - bias)));
  }
  rep.line(1, worst <= 1e-12, "one-step side probabilities match the closed form",
           "max deviation " + sci(worst) + " over 200 random coins (bound 1e-12)");
}

// 2. Equal-phase coins give reflection-symmetric distributions.
void check_equal_phase_symmetry(Report& rep) {
  double worst_point = 0.0;
  double worst_side = 0.0;
  for (const double angle : {0.0, kPi / 6, kPi / 3}) {
    const Mat2 coin = build_coin({angle, kPi / 4, angle});
    const Distribution d = distribution(evolve(100, InitialState{}, repeat_coin(coin, 100)));
    for (int x = 1; x <= d.t; ++x) {
      worst_point = std::max(worst_point, std::abs(d.p[d.t + x] - d.p[d.t - x]));
    }
    const SideProbabilities sp = side_probabilities(d);
    worst_side = std::max(worst_side, std::abs(sp.left - sp.right));
  }
  rep.line(2, worst_point <= 1e-10 && worst_side <= 1e-10,
           "equal-phase coins spread symmetrically",
           "t=100 pointwise " + sci(worst_point) + ", |P_L-P_R| " + sci(worst_side) +
               " (bounds 1e-10)");
}

// 3. Variance scaling of the balanced-mixing coin, plus the ballistic limit.
void check_variance_scaling(Report& rep) {
  const Distribution balanced = distribution(
      evolve(100, InitialState{}, repeat_coin(build_coin({0.0, kPi / 4, 0.0}), 100)));
  const double ratio = moments(balanced).variance / (100.0 * 100.0);
  const double target = 1.0 - std::sin(kPi / 4);
  const double rel = std::abs(ratio - target) / target;

  const Distribution ballistic = distribution(
      evolve(100, InitialState{}, repeat_coin(build_coin({0.0, 0.0, 0.0}), 100)));
  const double ballistic_err = std::abs(moments(ballistic).variance - 100.0 * 100.0);

  rep.line(3, rel <= 0.05 && ballistic_err <= 1e-9, "variance scaling",
           "t=100 variance/t^2=" + sci(ratio) + " vs " + sci(target) + " (rel err " +
               sci(rel) + ", bound 5%); ballistic variance error " + sci(ballistic_err));
}

// 4. Solo play loses on the whole parameter grid, with monotone margins.
void check_solo_futility(Report& rep) {
  const GameConfig cfg;
  bool ok = true;
  std::string why = "all 12 grid points lose for the solo player, margins monotone";
  double prev_a = 0.0, prev_b = 0.0;
  for (int k = 1; k <= 12; ++k) {
    const double angle = k * kPi / 24;
    const GameOutcome a = play_solo(Player::A, {angle, 0.0}, cfg);
    const GameOutcome b = play_solo(Player::B, {0.0, angle}, cfg);
    if (!(a.p_left > a.p_right) || a.winner == Winner::A) {
      ok = false;
      why = "solo A fails to lose at k=" + std::to_string(k);
      break;
    }
    if (!(b.p_right > b.p_left) || b.winner == Winner::B) {
      ok = false;
      why = "solo B fails to lose at k=" + std::to_string(k);
      break;
    }
    const double margin_a = a.p_left - a.p_right;
    const double margin_b = b.p_right - b.p_left;
    if (margin_a < prev_a - 1e-12 || margin_b < prev_b - 1e-12) {
      ok = false;
      why = "margin not monotone at k=" + std::to_string(k);
      break;
    }
    prev_a = margin_a;
    prev_b = margin_b;
  }
  rep.line(4, ok, "solo play always loses", why + " (theta=pi/4, t=100)");
}

// 5. Alternating equal-parameter games: even step counts are claimed to end
//    Joint within 1e-10 and odd step counts to cost the starter less than 0.1.
void check_alternating_strategy(Report& rep) {
  GameConfig cfg;
  double worst_even = 0.0;
  double worst_odd_margin = 0.0;
  bool odd_sign_ok = true;
  bool even_joint = true;
  for (const double angle : {kPi / 6, kPi / 3}) {
    const PlayerCoins coins{angle, angle};
    for (const int t : {2, 10, 100}) {
      cfg.steps = t;
      const GameOutcome out = play_alternating(Player::A, coins, cfg);
      worst_even = std::max(worst_even, std::abs(out.margin));
      if (out.winner != Winner::Joint) even_joint = false;
    }
    for (const int t : {3, 101}) {
      cfg.steps = t;
      const GameOutcome out = play_alternating(Player::A, coins, cfg);
      const double loss = out.p_left - out.p_right;
      if (!(loss > cfg.eq_tolerance)) odd_sign_ok = false;
      worst_odd_margin = std::max(worst_odd_margin, loss);
    }
  }
  const bool pass =
      even_joint && worst_even <= 1e-10 && odd_sign_ok && worst_odd_margin < 0.1;
  rep.line(5, pass, "alternating equal-parameter games",
           std::string("even t in {2,10,100}: |P_L-P_R| max ") + sci(worst_even) +
               " (bound 1e-10, joint " + (even_joint ? "yes" : "no") +
               "); odd t in {3,101}: starter loses " + (odd_sign_ok ? "yes" : "no") +
               ", margin max " + sci(worst_odd_margin) + " (bound 1e-1)");
}

// 6. Composite guarantee: xi=pi/2 row all Joint; off-diagonal signs fixed;
//    one-step anchor P_L=0.75 at (xi=0, zeta=pi/6).
void check_composite_guarantee(Report& rep, const WinnerRegionMap& sweep) {
  GameConfig cfg;
  bool row_joint = true;
  double worst_row = 0.0;
  for (int k = 0; k < 25; ++k) {
    const double zeta = k == 24 ? kHalfPi : kHalfPi * k / 24;
    const GameOutcome out = play_composite(Order::BA, {kHalfPi, zeta}, cfg);
    worst_row = std::max(worst_row, std::abs(out.margin));
    if (out.winner != Winner::Joint) row_joint = false;
  }

  int sign_violations = 0;
  const int n = sweep.resolution;
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Winner w = sweep.winner[sweep.cell(i, j)];
      if ((j > i && w != Winner::B) || (j < i && w != Winner::A)) ++sign_violations;
    }
  }

  cfg.steps = 1;
  const GameOutcome one = play_composite(Order::BA, {0.0, kPi / 6}, cfg);
  const double anchor_err = std::abs(one.p_left - 0.75);

  rep.line(6, row_joint && sign_violations == 0 && anchor_err <= 1e-12,
           "composite guarantee",
           "xi=pi/2 row joint (max |margin| " + sci(worst_row) + "); sign violations " +
               std::to_string(sign_violations) + "/576; one-step anchor error " +
               sci(anchor_err));
}

// 7. Composite closed forms match explicit products.
void check_composite_algebra(Report& rep) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  double worst = 0.0;
  const auto entry_diff = [](const Mat2& a, const Mat2& b) {
    return std::max(std::max(std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01)),
                    std::max(std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const double xi = angle(rng), theta = angle(rng), zeta = angle(rng);
    const Mat2 a = build_coin({xi, theta, 0.0});
    const Mat2 b = build_coin({0.0, theta, zeta});
    worst = std::max(worst, entry_diff(composite_BA(xi, theta, zeta), multiply(b, a)));
    worst = std::max(worst, entry_diff(composite_AB(xi, theta, zeta), multiply(a, b)));
  }
  rep.line(7, worst <= 1e-12, "composite closed forms match coin products",
           "max entry deviation " + sci(worst) + " over 1000 random triples (bound 1e-12)");
}

// 8. Step engine against the dense-matrix oracle on random mixed programs.
void check_dense_oracle(Report& rep) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> steps_dist(1, 10);
  std::uniform_int_distribution<int> coins_dist(1, 2);
  std::uniform_int_distribution<int> tag_dist(0, 1);
  std::uniform_real_distribution<double> param(0.0, kHalfPi);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const PlayerCoins coins{param(rng), param(rng)};
    const double theta = param(rng);
    dsl::StepProgram program(steps_dist(rng));
    for (dsl::Step& step : program) {
      const int k = coins_dist(rng);
      for (int c = 0; c < k; ++c) {
        step.push_back(tag_dist(rng) == 0 ? dsl::Tag::A : dsl::Tag::B);
      }
    }
    const CoinProgram bound = bind_program(program, coins, theta);
    const WalkState fast = evolve(static_cast<int>(bound.size()), InitialState{}, bound);
    const WalkState dense = dense_oracle_evolve(InitialState{}, bound);
    worst = std::max(worst, max_abs_diff(fast, dense));
  }
  rep.line(8, worst <= 1e-12, "step engine matches the dense oracle",
           "max amplitude deviation " + sci(worst) + " over 50 random programs (bound 1e-12)");
}

// 9. Figure bundles: panel orderings, the a/b mirror, and the sweep signs.
void check_figures(Report& rep, const WinnerRegionMap& sweep) {
  const std::vector<Fig2Panel> panels = compute_fig2();
  const bool orderings = panels[0].sides.left > panels[0].sides.right &&
                         panels[2].sides.left > panels[2].sides.right &&
                         panels[1].sides.right > panels[1].sides.left &&
                         panels[3].sides.right > panels[3].sides.left;
  double mirror = 0.0;
  const Distribution& a = panels[0].dist;
  const Distribution& b = panels[1].dist;
  for (int x = -a.t; x <= a.t; ++x) {
    mirror = std::max(mirror, std::abs(a.p[a.t + x] - b.p[b.t - x]));
  }

  int sweep_violations = 0;
  const int n = sweep.resolution;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Winner w = sweep.winner[sweep.cell(i, j)];
      const Winner expect =
          (i == j || i == n - 1) ? Winner::Joint : (j > i ? Winner::B : Winner::A);
      if (w != expect) ++sweep_violations;
    }
  }

  rep.line(9, orderings && mirror <= 1e-10 && sweep_violations == 0, "figure bundles",
           std::string("panel orderings ") + (orderings ? "correct" : "wrong") +
               "; a/b mirror deviation " + sci(mirror) + " (bound 1e-10); sweep label violations " +
               std::to_string(sweep_violations) + "/625");
}

// 10. Strategy language: round trip, composite-step semantics, fuzzed errors.
void check_strategy_dsl(Report& rep) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> len_dist(1, 30);
  std::uniform_int_distribution<int> width_dist(1, 4);
  std::uniform_int_distribution<int> tag_dist(0, 1);

  bool round_trip = true;
  for (int trial = 0; trial < 200 && round_trip; ++trial) {
    dsl::StepProgram program(len_dist(rng));
    for (dsl::Step& step : program) {
      const int w = width_dist(rng);
      for (int c = 0; c < w; ++c) {
        step.push_back(tag_dist(rng) == 0 ? dsl::Tag::A : dsl::Tag::B);
      }
    }
    round_trip = dsl::expand(dsl::parse(dsl::render(program))) == program;
  }

  const PlayerCoins coins{kPi / 5, kPi / 7};
  const double theta = kPi / 4;
  const CoinProgram via_dsl = bind_program(dsl::expand(dsl::parse("(AB)^20")), coins, theta);
  const CoinProgram via_closed_form =
      repeat_coin(composite_BA(coins.xi_A, theta, coins.zeta_B), 20);
  const double semantic = max_abs_diff(evolve(20, InitialState{}, via_dsl),
                                       evolve(20, InitialState{}, via_closed_form));

  std::uniform_int_distribution<int> char_dist(0, 16);
  std::uniform_int_distribution<int> flen_dist(0, 24);
  const char alphabet[] = "AB()^0123456789 $";
  int bad_errors = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::string src;
    const int len = flen_dist(rng);
    for (int i = 0; i < len; ++i) src += alphabet[char_dist(rng)];
    try {
      dsl::expand(dsl::parse(src), 100000);
    } catch (const ParseError& err) {
      if (err.position() > src.size()) ++bad_errors;
    } catch (const std::length_error&) {
      // cap trips are acceptable for fuzzed repeat pileups
    } catch (...) {
      ++bad_errors;
    }
  }

  rep.line(10, round_trip && semantic <= 1e-12 && bad_errors == 0, "strategy language",
           std::string("round trip ") + (round_trip ? "holds" : "broken") +
               "; (AB)^20 vs closed-form composite deviation " + sci(semantic) +
               " (bound 1e-12); fuzz anomalies " + std::to_string(bad_errors) + "/500");
}

}  // namespace

int run_acceptance(std::ostream& out) {
  Report rep{out};
  check_one_step_closed_form(rep);
  check_equal_phase_symmetry(rep);
  check_variance_scaling(rep);
  check_solo_futility(rep);
  check_alternating_strategy(rep);
  const WinnerRegionMap sweep = sweep_winner_region(Order::BA, GameConfig{}, 25);
  check_composite_guarantee(rep, sweep);
  check_composite_algebra(rep);
  check_dense_oracle(rep);
  check_figures(rep, sweep);
  check_strategy_dsl(rep);
  out << (10 - rep.failures) << "/10 checks passed\n";
  return rep.failures;
}

}  // namespace qwalk
