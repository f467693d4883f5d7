#include "qwalk/walk.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>

namespace qwalk {

namespace {

// Net matrix for applying each coin in list order to a column vector.
Mat2 fold_coins(std::span<const Mat2> coins) {
  Mat2 net = coins.front();
  for (std::size_t i = 1; i < coins.size(); ++i) net = multiply(coins[i], net);
  return net;
}

// Reference kernel: in-place coin pass, then in-place index-offset shift.
void step_serial(WalkState& st, const Mat2& m) {
  const int n = st.sites();
  Complex* u = st.up.data();
  Complex* d = st.down.data();
  for (int i = 0; i < n; ++i) {
    const Complex a = u[i];
    const Complex b = d[i];
    u[i] = m.m00 * a + m.m01 * b;
    d[i] = m.m10 * a + m.m11 * b;
  }
  for (int i = 0; i + 1 < n; ++i) u[i] = u[i + 1];
  u[n - 1] = Complex{};
  for (int i = n - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = Complex{};
}

// Fused kernel: one gather pass into scratch. Evaluates the same expressions
// in the same operand order as step_serial, so results are bit-identical.
void step_parallel(WalkState& st, const Mat2& m) {
  const int n = st.sites();
  st.scratch_up.resize(n);
  st.scratch_down.resize(n);
  const Complex* u = st.up.data();
  const Complex* d = st.down.data();
  Complex* nu = st.scratch_up.data();
  Complex* nd = st.scratch_down.data();
  const int workers = thread_cap();
#pragma omp parallel for schedule(static) num_threads(workers)
  for (int i = 0; i < n; ++i) {
    nu[i] = i + 1 < n ? m.m00 * u[i + 1] + m.m01 * d[i + 1] : Complex{};
    nd[i] = i > 0 ? m.m10 * u[i - 1] + m.m11 * d[i - 1] : Complex{};
  }
  st.up.swap(st.scratch_up);
  st.down.swap(st.scratch_down);
}

// Below this many sites the serial pass wins; identical results either way.
constexpr int kParallelThreshold = 32768;

}  // namespace

int thread_cap() {
  int workers = omp_get_max_threads();
  if (const char* env = std::getenv("QWALK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v < workers) workers = static_cast<int>(v);
  }
  return workers > 0 ? workers : 1;
}

WalkState init_state(int t_max, InitialState s) {
  if (t_max < 0) throw std::invalid_argument("capacity must be nonnegative");
  require_finite(s.delta, "delta");
  require_finite(s.phi, "phi");
  WalkState st;
  st.t_max = t_max;
  st.steps_done = 0;
  st.up.assign(st.sites(), Complex{});
  st.down.assign(st.sites(), Complex{});
  st.up[st.index(0)] = std::cos(s.delta / 2.0);
  st.down[st.index(0)] = std::sin(s.delta / 2.0) * unit_phase(s.phi);
  return st;
}

void apply_step(WalkState& st, std::span<const Mat2> coins, Kernel kernel) {
  if (st.steps_done >= st.t_max) throw std::length_error("walk capacity exhausted");
  if (coins.empty()) throw std::invalid_argument("a step needs at least one coin");
  for (const Mat2& c : coins) {
    if (!is_unitary(c, 1e-12)) throw std::invalid_argument("coin is not unitary");
  }
  const Mat2 net = fold_coins(coins);
  const bool parallel =
      kernel == Kernel::Parallel || (kernel == Kernel::Auto && st.sites() >= kParallelThreshold);
  if (parallel) {
    step_parallel(st, net);
  } else {
    step_serial(st, net);
  }
  ++st.steps_done;
}

WalkState evolve(int t_max, InitialState s, const CoinProgram& program, Kernel kernel) {
  if (t_max >= 0 && program.size() > static_cast<std::size_t>(t_max)) {
    throw std::length_error("program longer than walk capacity");
  }
  WalkState st = init_state(t_max, s);
  for (const CoinStep& step : program) apply_step(st, step, kernel);
  return st;
}

Distribution distribution(const WalkState& st) {
  Distribution d;
  d.t = st.steps_done;
  d.p.resize(2 * d.t + 1);
  for (int x = -d.t; x <= d.t; ++x) {
    const Complex a = st.up[st.index(x)];
    const Complex b = st.down[st.index(x)];
    d.p[x + d.t] = std::norm(a) + std::norm(b);
  }
  return d;
}

SideProbabilities side_probabilities(const Distribution& d) {
  SideProbabilities sp;
  for (int i = 0; i < d.t; ++i) sp.left += d.p[i];
  for (int i = d.t + 1; i < 2 * d.t + 1; ++i) sp.right += d.p[i];
  sp.origin = d.p[d.t];
  return sp;
}

Moments moments(const Distribution& d) {
  Moments m;
  double second = 0.0;
  for (int x = -d.t; x <= d.t; ++x) {
    const double p = d.p[x + d.t];
    m.mean += x * p;
    second += static_cast<double>(x) * x * p;
  }
  m.variance = second - m.mean * m.mean;
  return m;
}

namespace {

using DenseMatrix = std::vector<std::vector<Complex>>;
using DenseVector = std::vector<Complex>;

DenseVector apply_dense(const DenseMatrix& m, const DenseVector& v) {
  const std::size_t dim = v.size();
  DenseVector out(dim, Complex{});
  for (std::size_t r = 0; r < dim; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < dim; ++c) acc += m[r][c] * v[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace

WalkState dense_oracle_evolve(InitialState s, const CoinProgram& program) {
  const int t = static_cast<int>(program.size());
  if (t > 32) throw std::length_error("dense oracle refuses more than 32 steps");
  const int n = 2 * t + 1;
  const int dim = 2 * n;
  const auto idx = [n, t](int c, int x) { return c * n + (x + t); };

  DenseVector psi(dim, Complex{});
  psi[idx(0, 0)] = std::cos(s.delta / 2.0);
  psi[idx(1, 0)] = std::sin(s.delta / 2.0) * unit_phase(s.phi);

  // Shift as an explicit permutation; the wrap rows keep it unitary and are
  // never reached because the support grows by one site per step.
  DenseMatrix shift(dim, DenseVector(dim, Complex{}));
  for (int x = -t; x <= t; ++x) {
    const int left = x - 1 < -t ? t : x - 1;
    const int right = x + 1 > t ? -t : x + 1;
    shift[idx(0, left)][idx(0, x)] = 1.0;
    shift[idx(1, right)][idx(1, x)] = 1.0;
  }

  for (const CoinStep& step : program) {
    if (step.empty()) throw std::invalid_argument("a step needs at least one coin");
    for (const Mat2& coin : step) {
      if (!is_unitary(coin, 1e-12)) throw std::invalid_argument("coin is not unitary");
      DenseMatrix op(dim, DenseVector(dim, Complex{}));
      for (int x = -t; x <= t; ++x) {
        op[idx(0, x)][idx(0, x)] = coin.m00;
        op[idx(0, x)][idx(1, x)] = coin.m01;
        op[idx(1, x)][idx(0, x)] = coin.m10;
        op[idx(1, x)][idx(1, x)] = coin.m11;
      }
      psi = apply_dense(op, psi);
    }
    psi = apply_dense(shift, psi);
  }

  WalkState st;
  st.t_max = t;
  st.steps_done = t;
  st.up.assign(n, Complex{});
  st.down.assign(n, Complex{});
  for (int x = -t; x <= t; ++x) {
    st.up[st.index(x)] = psi[idx(0, x)];
    st.down[st.index(x)] = psi[idx(1, x)];
  }
  return st;
}

}  // namespace qwalk
