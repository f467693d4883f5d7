#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qwalk/angles.hpp"
#include "qwalk/cli.hpp"
#include "qwalk/coin.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("qwalk");
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream captured_out, captured_err;
    std::streambuf* old_out = std::cout.rdbuf(captured_out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(captured_err.rdbuf());
    CliResult r;
    r.code = qwalk::run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    r.out = captured_out.str();
    r.err = captured_err.str();
    return r;
}

fs::path fresh_dir(const char* name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("zero-step walk emits the exact golden bytes") {
    const CliResult r = run({"walk", "--steps", "0"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "x,p\n0,1.0\n"
          "{\"t\":0,\"P_L\":0.0,\"P_R\":0.0,\"P_origin\":1.0,\"mean\":0.0,\"variance\":0.0}\n");
}

TEST_CASE("walk output is byte-deterministic across runs") {
    const std::vector<std::string> args{"walk", "--steps", "50", "--xi", "pi/6"};
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    const std::vector<std::string> la = lines_of(first.out);
    REQUIRE(la.size() == 1 + 101 + 1);  // header, one row per site, summary
    CHECK(la.front() == "x,p");
    CHECK(la.back().rfind("{\"t\":50,\"P_L\":", 0) == 0);
}

TEST_CASE("one-step distribution matches the closed form") {
    const CliResult r = run({"walk", "--steps", "1", "--xi", "pi/6"});
    CHECK(r.code == 0);
    const std::vector<std::string> la = lines_of(r.out);
    REQUIRE(la.size() == 5);
    CHECK(la[0] == "x,p");
    CHECK(la[1].rfind("-1,", 0) == 0);
    CHECK(la[2] == "0,0.0");
    CHECK(la[3].rfind("1,", 0) == 0);
    const double p_left = std::stod(la[1].substr(3));
    const double p_right = std::stod(la[3].substr(2));
    CHECK(std::abs(p_left - 0.75) <= 1e-12);
    CHECK(std::abs(p_right - 0.25) <= 1e-12);
}

TEST_CASE("walk json payload parses and keeps the key order") {
    const CliResult r = run({"walk", "--steps", "2", "--format", "json"});
    CHECK(r.code == 0);
    const std::vector<std::string> la = lines_of(r.out);
    REQUIRE(la.size() == 2);
    CHECK(la[0].rfind("{\"t\":2,\"p\":[[-2,", 0) == 0);
    const nlohmann::json payload = nlohmann::json::parse(la[0]);
    CHECK(payload["t"] == 2);
    CHECK(payload["p"].size() == 5);
    const nlohmann::json summary = nlohmann::json::parse(la[1]);
    CHECK(summary["t"] == 2);

    const std::string& s = la[1];
    CHECK(s.find("\"t\":") < s.find("\"P_L\":"));
    CHECK(s.find("\"P_L\":") < s.find("\"P_R\":"));
    CHECK(s.find("\"P_R\":") < s.find("\"P_origin\":"));
    CHECK(s.find("\"P_origin\":") < s.find("\"mean\":"));
    CHECK(s.find("\"mean\":") < s.find("\"variance\":"));
}

TEST_CASE("walk with an output path writes payload and summary files") {
    const fs::path dir = fresh_dir("qwalk_cli_walk_out");
    const fs::path payload_path = dir / "dist.csv";
    const CliResult direct = run({"walk", "--steps", "8", "--xi", "pi/3"});
    const CliResult filed =
        run({"walk", "--steps", "8", "--xi", "pi/3", "--output", payload_path.string()});
    CHECK(filed.code == 0);

    const std::string payload = slurp(payload_path);
    const std::string summary = slurp(dir / "dist.summary.json");
    CHECK(payload + summary == direct.out);     // same bytes, split across files
    CHECK(filed.out == summary);                // summary is echoed to stdout
    CHECK(summary.rfind("{\"t\":8,", 0) == 0);
}

TEST_CASE("game adjudicates frozen matchups") {
    const CliResult turns =
        run({"game", "--strategy", "(A B)^50", "--xi", "pi/6", "--zeta", "pi/6"});
    CHECK(turns.code == 0);
    const nlohmann::json t = nlohmann::json::parse(turns.out);
    CHECK(t["winner"] == "B");
    CHECK(t["steps"] == 100);
    CHECK(t["strategy"] == "(A B)^50");
    CHECK(std::abs(t["margin"].get<double>() - -0.2053243027749167) <= 1e-9);

    const CliResult fused =
        run({"game", "--strategy", "(AB)^100", "--xi", "pi/2", "--zeta", "pi/3"});
    CHECK(nlohmann::json::parse(fused.out)["winner"] == "Joint");

    const CliResult solo = run({"game", "--strategy", "(A)^100", "--xi", "pi/6"});
    CHECK(nlohmann::json::parse(solo.out)["winner"] == "B");

    const std::string& s = turns.out;
    CHECK(s.find("\"P_L\":") < s.find("\"P_R\":"));
    CHECK(s.find("\"P_R\":") < s.find("\"P_origin\":"));
    CHECK(s.find("\"P_origin\":") < s.find("\"winner\":"));
    CHECK(s.find("\"winner\":") < s.find("\"margin\":"));
    CHECK(s.find("\"margin\":") < s.find("\"steps\":"));
    CHECK(s.find("\"steps\":") < s.find("\"strategy\":"));
}

TEST_CASE("bad inputs exit with the scripting code") {
    const CliResult bad_program = run({"game", "--strategy", "A^2"});
    CHECK(bad_program.code == 2);
    CHECK(bad_program.err.find("at offset 1") != std::string::npos);

    const CliResult bad_angle = run({"walk", "--theta", "bogus"});
    CHECK(bad_angle.code == 2);
    CHECK(bad_angle.err.rfind("error:", 0) == 0);

    const CliResult no_strategy = run({"game"});
    CHECK(no_strategy.code == 2);
    CHECK(no_strategy.err.find("--strategy") != std::string::npos);

    const CliResult bad_order = run({"sweep", "--order", "XY", "--resolution", "2", "--steps", "1"});
    CHECK(bad_order.code == 2);

    CHECK(run({"walk", "--steps", "-3"}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({"figure", "fig9"}).code != 0);
}

TEST_CASE("config files fill in flags the user left unset") {
    const fs::path dir = fresh_dir("qwalk_cli_config");
    const fs::path cfg = dir / "walk.json";
    std::ofstream(cfg) << "{\"steps\": 3, \"xi\": \"pi/6\"}";

    const CliResult from_config = run({"walk", "--config", cfg.string()});
    CHECK(from_config.code == 0);
    CHECK(from_config.out.find("{\"t\":3,") != std::string::npos);
    CHECK(from_config.out == run({"walk", "--steps", "3", "--xi", "pi/6"}).out);

    const CliResult overridden = run({"walk", "--config", cfg.string(), "--steps", "5"});
    CHECK(overridden.out.find("{\"t\":5,") != std::string::npos);
    CHECK(overridden.out == run({"walk", "--steps", "5", "--xi", "pi/6"}).out);

    const fs::path numeric = dir / "numeric.json";
    std::ofstream(numeric) << "{\"xi\": 0.25}";
    CHECK(run({"walk", "--config", numeric.string(), "--steps", "4"}).out ==
          run({"walk", "--xi", "0.25", "--steps", "4"}).out);

    const fs::path unknown = dir / "unknown.json";
    std::ofstream(unknown) << "{\"bogus\": 1}";
    const CliResult rejected = run({"walk", "--config", unknown.string()});
    CHECK(rejected.code == 2);
    CHECK(rejected.err.find("unknown config key") != std::string::npos);

    const CliResult missing = run({"walk", "--config", (dir / "absent.json").string()});
    CHECK(missing.code == 3);
}

TEST_CASE("sweep emits the labeled grid") {
    const CliResult r = run({"sweep", "--resolution", "3", "--steps", "4"});
    CHECK(r.code == 0);
    const std::vector<std::string> la = lines_of(r.out);
    REQUIRE(la.size() == 1 + 9);
    CHECK(la[0] == "xi,zeta,margin,winner");
    CHECK(la[1].rfind("0.0,0.0,", 0) == 0);
    CHECK(la.back().rfind("1.5707963267948966,1.5707963267948966,", 0) == 0);
    for (std::size_t i = 1; i < la.size(); ++i) {
        const std::string winner = la[i].substr(la[i].rfind(',') + 1);
        CHECK((winner == "A" || winner == "B" || winner == "Joint"));
    }

    const fs::path dir = fresh_dir("qwalk_cli_sweep");
    const fs::path out = dir / "grid.csv";
    const CliResult filed =
        run({"sweep", "--resolution", "3", "--steps", "4", "--output", out.string()});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(out) == r.out);
}

TEST_CASE("figure bundles land in the output directory") {
    const fs::path dir = fresh_dir("qwalk_cli_figures");

    const CliResult f2 = run({"figure", "fig2", "--outdir", dir.string(), "--steps", "6"});
    CHECK(f2.code == 0);
    const std::vector<std::string> f2_paths = lines_of(f2.out);
    REQUIRE(f2_paths.size() == 5);
    for (const std::string& p : f2_paths) CHECK(fs::exists(p));

    const std::string panel_a = slurp(dir / "fig2_a.csv");
    CHECK(panel_a.rfind("x,p\n", 0) == 0);
    CHECK(lines_of(panel_a).size() == 1 + 13);

    const std::string manifest_text = slurp(dir / "fig2_manifest.json");
    const nlohmann::json manifest = nlohmann::json::parse(manifest_text);
    CHECK(manifest["bundle"] == "fig2");
    REQUIRE(manifest["files"].size() == 4);
    CHECK(manifest["files"][0]["file"] == "fig2_a.csv");
    CHECK(manifest["files"][0]["params"]["xi"] == "pi/6");
    CHECK(manifest["files"][0]["params"]["theta"] == "pi/6");
    CHECK(manifest["files"][0]["params"]["zeta"] == "0");
    CHECK(manifest["files"][0]["params"]["steps"] == 6);
    CHECK(manifest["files"][0]["params"]["delta"] == "pi/2");
    CHECK(manifest["files"][1]["panel"] == "b");
    CHECK(manifest["files"][2]["params"]["xi"] == "5pi/12");
    CHECK(manifest["files"][3]["params"]["zeta"] == "5pi/12");
    CHECK(manifest["files"][0]["summary"]["t"] == 6);
    CHECK(manifest_text.find("\"file\"") < manifest_text.find("\"panel\""));
    CHECK(manifest_text.find("\"panel\"") < manifest_text.find("\"params\""));
    CHECK(manifest_text.find("\"params\"") < manifest_text.find("\"summary\""));

    const CliResult f3 = run({"figure", "fig3", "--outdir", dir.string(), "--steps", "4",
                              "--resolution", "3"});
    CHECK(f3.code == 0);
    REQUIRE(lines_of(f3.out).size() == 2);
    const std::string sweep_csv = slurp(dir / "fig3_sweep_BA.csv");
    CHECK(sweep_csv.rfind("xi,zeta,margin,winner\n", 0) == 0);
    CHECK(lines_of(sweep_csv).size() == 1 + 9);
    const nlohmann::json f3_manifest = nlohmann::json::parse(slurp(dir / "fig3_manifest.json"));
    CHECK(f3_manifest["bundle"] == "fig3");
    CHECK(f3_manifest["files"][0]["order"] == "BA");
    CHECK(f3_manifest["files"][0]["params"]["steps"] == 4);
    CHECK(f3_manifest["files"][0]["params"]["resolution"] == 3);
}

TEST_CASE("angle literals cover the documented forms") {
    CHECK(qwalk::parse_angle("pi/4") == doctest::Approx(qwalk::kPi / 4.0).epsilon(1e-15));
    CHECK(qwalk::parse_angle("5pi/12") == doctest::Approx(5.0 * qwalk::kPi / 12.0).epsilon(1e-15));
    CHECK(qwalk::parse_angle("2pi") == doctest::Approx(2.0 * qwalk::kPi).epsilon(1e-15));
    CHECK(qwalk::parse_angle("1.5pi") == doctest::Approx(1.5 * qwalk::kPi).epsilon(1e-15));
    CHECK(qwalk::parse_angle("-pi/3") == doctest::Approx(-qwalk::kPi / 3.0).epsilon(1e-15));
    CHECK(qwalk::parse_angle("0.5") == 0.5);
    CHECK(qwalk::parse_angle("1e-2") == 0.01);
    CHECK(qwalk::parse_angle(" pi ") == doctest::Approx(qwalk::kPi).epsilon(1e-15));
    CHECK(qwalk::parse_angle("+pi/2") == doctest::Approx(qwalk::kHalfPi).epsilon(1e-15));

    struct Bad {
        const char* text;
        std::size_t position;
    };
    const Bad cases[] = {
        {"", 0}, {"-", 1}, {"pi/0", 3}, {"xpi", 0}, {"pi/", 3}, {"3.14x", 4}, {"pi!", 2},
    };
    for (const Bad& bad : cases) {
        CAPTURE(bad.text);
        CHECK_THROWS_AS((void)qwalk::parse_angle(bad.text), qwalk::ParseError);
        try {
            (void)qwalk::parse_angle(bad.text);
        } catch (const qwalk::ParseError& e) {
            CHECK(e.position() == bad.position);
        }
    }
}
