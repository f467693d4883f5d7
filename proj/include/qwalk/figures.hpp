#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qwalk/game.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// One labeled single-coin distribution panel of the fig2 bundle.
struct Fig2Panel {
  char id;                    // 'a'..'d'
  CoinParams params;
  int steps;
  Distribution dist;
  SideProbabilities sides;
  Moments mom;
};

// Panels: a=(pi/6, pi/6, 0), b=(0, pi/6, pi/6), c=(5pi/12, pi/3, 0),
// d=(0, pi/3, 5pi/12), all from the standard start state.
std::vector<Fig2Panel> compute_fig2(int steps = 100);

// The winner-region sweep bundle: both coins per step, A's coin first.
WinnerRegionMap compute_fig3(const GameConfig& cfg, int resolution = 25);

// Write panel CSVs plus a manifest naming each file's exact parameters.
// Returns the paths written, manifest last.
std::vector<std::filesystem::path> emit_fig2(const std::filesystem::path& outdir,
                                             int steps = 100);
std::vector<std::filesystem::path> emit_fig3(const std::filesystem::path& outdir,
                                             const GameConfig& cfg, int resolution = 25);

}  // namespace qwalk
