#include "qwalk/figures.hpp"

#include <fstream>
#include <stdexcept>

#include "qwalk/emit.hpp"

namespace qwalk {

namespace {

struct PanelPreset {
  char id;
  const char* xi;
  const char* theta;
  const char* zeta;
  double xi_v, theta_v, zeta_v;
};

// Literal strings are kept beside the values so the manifest can name each
// panel's parameters exactly as configured.
constexpr PanelPreset kPanels[4] = {
    {'a', "pi/6", "pi/6", "0", kPi / 6, kPi / 6, 0.0},
    {'b', "0", "pi/6", "pi/6", 0.0, kPi / 6, kPi / 6},
    {'c', "5pi/12", "pi/3", "0", 5 * kPi / 12, kPi / 3, 0.0},
    {'d', "0", "pi/3", "5pi/12", 0.0, kPi / 3, 5 * kPi / 12},
};

std::ofstream open_binary(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::vector<Fig2Panel> compute_fig2(int steps) {
  std::vector<Fig2Panel> panels;
  panels.reserve(4);
  for (const PanelPreset& preset : kPanels) {
    Fig2Panel panel;
    panel.id = preset.id;
    panel.params = {preset.xi_v, preset.theta_v, preset.zeta_v};
    panel.steps = steps;
    const CoinProgram program(steps, CoinStep{build_coin(panel.params)});
    const WalkState st = evolve(steps, InitialState{}, program);
    panel.dist = distribution(st);
    panel.sides = side_probabilities(panel.dist);
    panel.mom = moments(panel.dist);
    panels.push_back(std::move(panel));
  }
  return panels;
}

WinnerRegionMap compute_fig3(const GameConfig& cfg, int resolution) {
  return sweep_winner_region(Order::BA, cfg, resolution);
}

std::vector<std::filesystem::path> emit_fig2(const std::filesystem::path& outdir, int steps) {
  std::filesystem::create_directories(outdir);
  std::vector<std::filesystem::path> written;
  std::string manifest = "{\"bundle\":\"fig2\",\"files\":[";
  const std::vector<Fig2Panel> panels = compute_fig2(steps);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Fig2Panel& panel = panels[i];
    const PanelPreset& preset = kPanels[i];
    const std::string name = std::string("fig2_") + panel.id + ".csv";
    auto csv = open_binary(outdir / name);
    write_distribution_csv(csv, panel.dist);
    written.push_back(outdir / name);

    if (i > 0) manifest += ',';
    manifest += "{\"file\":\"" + name + "\",\"panel\":\"" + panel.id +
                "\",\"params\":{\"xi\":\"" + preset.xi + "\",\"theta\":\"" + preset.theta +
                "\",\"zeta\":\"" + preset.zeta + "\",\"steps\":" + std::to_string(steps) +
                ",\"delta\":\"pi/2\",\"phi\":\"pi/2\"},\"summary\":" +
                walk_summary_json(panel.dist.t, panel.sides, panel.mom);
    manifest.pop_back();  // strip the summary newline
    manifest += '}';
  }
  manifest += "]}\n";
  const std::filesystem::path manifest_path = outdir / "fig2_manifest.json";
  open_binary(manifest_path) << manifest;
  written.push_back(manifest_path);
  return written;
}

std::vector<std::filesystem::path> emit_fig3(const std::filesystem::path& outdir,
                                             const GameConfig& cfg, int resolution) {
  std::filesystem::create_directories(outdir);
  const WinnerRegionMap map = compute_fig3(cfg, resolution);
  const std::filesystem::path sweep_path = outdir / "fig3_sweep_BA.csv";
  {
    auto csv = open_binary(sweep_path);
    write_sweep_csv(csv, map);
  }
  std::string manifest =
      "{\"bundle\":\"fig3\",\"files\":[{\"file\":\"fig3_sweep_BA.csv\","
      "\"order\":\"BA\",\"params\":{\"theta\":" +
      format_real(cfg.theta) + ",\"steps\":" + std::to_string(cfg.steps) +
      ",\"resolution\":" + std::to_string(resolution) +
      ",\"eq_tolerance\":" + format_real(cfg.eq_tolerance) + "}}]}\n";
  const std::filesystem::path manifest_path = outdir / "fig3_manifest.json";
  open_binary(manifest_path) << manifest;
  return {sweep_path, manifest_path};
}

}  // namespace qwalk
