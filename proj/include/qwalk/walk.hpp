#pragma once

#include <span>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// cos(delta/2)|0> + sin(delta/2) e^{i phi}|1> at the origin.
struct InitialState {
  double delta = kHalfPi;
  double phi = kHalfPi;
};

enum class Kernel { Serial, Parallel, Auto };

// Coins applied within one step, in application order, before the single shift.
using CoinStep = std::vector<Mat2>;
using CoinProgram = std::vector<CoinStep>;

// Invariants: total probability 1 within 1e-10; amp is zero outside
// |x| <= steps_done and wherever x and steps_done differ in parity.
struct WalkState {
  int t_max = 0;
  int steps_done = 0;
  std::vector<Complex> up;    // |0> amplitudes, index x + t_max
  std::vector<Complex> down;  // |1> amplitudes, index x + t_max

  int sites() const { return 2 * t_max + 1; }
  int index(int x) const { return x + t_max; }

  std::vector<Complex> scratch_up, scratch_down;
};

struct Distribution {
  int t = 0;                  // support radius: x ranges over [-t, t]
  std::vector<double> p;      // index x + t
};

struct SideProbabilities {
  double left = 0.0;
  double right = 0.0;
  double origin = 0.0;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

WalkState init_state(int t_max, InitialState s = {});

// One step: every coin in list order on the internal register, then the shift
// (|0> amplitude moves one site toward -x, |1> one site toward +x).
void apply_step(WalkState& st, std::span<const Mat2> coins, Kernel kernel = Kernel::Auto);

WalkState evolve(int t_max, InitialState s, const CoinProgram& program,
                 Kernel kernel = Kernel::Auto);

Distribution distribution(const WalkState& st);
SideProbabilities side_probabilities(const Distribution& d);
Moments moments(const Distribution& d);

// Independent checker: builds each step as explicit dense matrices on the full
// joint space and applies them by dense mat-vec products. Refuses more than 32 steps.
WalkState dense_oracle_evolve(InitialState s, const CoinProgram& program);

// Worker count for parallel regions: QWALK_THREADS caps the OpenMP default.
int thread_cap();

}  // namespace qwalk
