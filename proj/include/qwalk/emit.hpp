#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qwalk/game.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// 17 significant digits, '.' decimal separator, always carries a decimal
// marker so integral values read back as reals. Byte-stable per value.
std::string format_real(double v);

std::string json_escape(std::string_view s);

const char* winner_name(Winner w);

// Header "x,p", one row per site in [-t, t].
void write_distribution_csv(std::ostream& out, const Distribution& d);

// {"t":...,"p":[[x,p],...]}
std::string distribution_json(const Distribution& d);

// {"t":...,"P_L":...,"P_R":...,"P_origin":...,"mean":...,"variance":...}
std::string walk_summary_json(int t, const SideProbabilities& sp, const Moments& m);

// {"P_L":...,"P_R":...,"P_origin":...,"winner":...,"margin":...,"steps":...,"strategy":...}
std::string game_outcome_json(const GameOutcome& out, std::size_t steps,
                              std::string_view strategy);

// Header "xi,zeta,margin,winner", row-major over (xi outer, zeta inner).
void write_sweep_csv(std::ostream& out, const WinnerRegionMap& map);

}  // namespace qwalk
