// Timing harness comparing the serial reference kernel against the fused
// parallel kernel, plus one end-to-end winner-region sweep.  Both kernels
// evaluate the same expressions, so the probability vectors they produce are
// compared with exact equality at the end of each run.

#include <chrono>
#include <cstdio>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/game.hpp"
#include "qwalk/walk.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double run_walk(int t_max, qwalk::Kernel kernel, qwalk::Distribution& out) {
    const qwalk::Mat2 coin = qwalk::build_coin({qwalk::kPi / 6.0, qwalk::kPi / 4.0, 0.0});
    const std::vector<qwalk::Mat2> step{coin};
    qwalk::WalkState st = qwalk::init_state(t_max, qwalk::InitialState{});
    const auto start = Clock::now();
    for (int t = 0; t < t_max; ++t) qwalk::apply_step(st, step, kernel);
    const double elapsed = seconds_since(start);
    out = qwalk::distribution(st);
    return elapsed;
}

bool identical(const qwalk::Distribution& a, const qwalk::Distribution& b) {
    if (a.p.size() != b.p.size()) return false;
    for (std::size_t i = 0; i < a.p.size(); ++i)
        if (a.p[i] != b.p[i]) return false;
    return true;
}

}  // namespace

int main() {
    std::printf("worker threads: %d\n\n", qwalk::thread_cap());
    std::printf("%8s  %12s  %12s  %8s  %s\n", "steps", "serial [s]", "parallel [s]", "speedup", "bit-identical");
    for (int t_max : {500, 2000, 8000}) {
        qwalk::Distribution serial_dist;
        qwalk::Distribution parallel_dist;
        const double serial = run_walk(t_max, qwalk::Kernel::Serial, serial_dist);
        const double parallel = run_walk(t_max, qwalk::Kernel::Parallel, parallel_dist);
        std::printf("%8d  %12.4f  %12.4f  %8.2f  %s\n", t_max, serial, parallel,
                    serial / parallel, identical(serial_dist, parallel_dist) ? "yes" : "NO");
    }

    std::printf("\nwinner-region sweep, 25x25 grid, 100 steps per cell\n");
    const auto start = Clock::now();
    const qwalk::WinnerRegionMap map =
        qwalk::sweep_winner_region(qwalk::Order::BA, qwalk::GameConfig{}, 25);
    std::printf("  %.4f s for %zu cells\n", seconds_since(start), map.margin.size());
    return 0;
}
