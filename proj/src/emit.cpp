#include "qwalk/emit.hpp"

#include <cstdio>
#include <ostream>

namespace qwalk {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_not_of("+-0123456789") == std::string::npos) s += ".0";
  return s;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

const char* winner_name(Winner w) {
  switch (w) {
    case Winner::A: return "A";
    case Winner::B: return "B";
    default: return "Joint";
  }
}

void write_distribution_csv(std::ostream& out, const Distribution& d) {
  out << "x,p\n";
  for (int x = -d.t; x <= d.t; ++x) {
    out << x << ',' << format_real(d.p[x + d.t]) << '\n';
  }
}

std::string distribution_json(const Distribution& d) {
  std::string out = "{\"t\":" + std::to_string(d.t) + ",\"p\":[";
  for (int x = -d.t; x <= d.t; ++x) {
    if (x > -d.t) out += ',';
    out += '[' + std::to_string(x) + ',' + format_real(d.p[x + d.t]) + ']';
  }
  out += "]}\n";
  return out;
}

std::string walk_summary_json(int t, const SideProbabilities& sp, const Moments& m) {
  return "{\"t\":" + std::to_string(t) + ",\"P_L\":" + format_real(sp.left) +
         ",\"P_R\":" + format_real(sp.right) + ",\"P_origin\":" + format_real(sp.origin) +
         ",\"mean\":" + format_real(m.mean) + ",\"variance\":" + format_real(m.variance) +
         "}\n";
}

std::string game_outcome_json(const GameOutcome& out, std::size_t steps,
                              std::string_view strategy) {
  return std::string("{\"P_L\":") + format_real(out.p_left) +
         ",\"P_R\":" + format_real(out.p_right) +
         ",\"P_origin\":" + format_real(out.p_origin) + ",\"winner\":\"" +
         winner_name(out.winner) + "\",\"margin\":" + format_real(out.margin) +
         ",\"steps\":" + std::to_string(steps) + ",\"strategy\":\"" +
         json_escape(strategy) + "\"}\n";
}

void write_sweep_csv(std::ostream& out, const WinnerRegionMap& map) {
  out << "xi,zeta,margin,winner\n";
  for (int i = 0; i < map.resolution; ++i) {
    for (int j = 0; j < map.resolution; ++j) {
      const int cell = map.cell(i, j);
      out << format_real(map.axis[i]) << ',' << format_real(map.axis[j]) << ','
          << format_real(map.margin[cell]) << ',' << winner_name(map.winner[cell]) << '\n';
    }
  }
}

}  // namespace qwalk
