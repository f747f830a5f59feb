#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kBin = DUOPOLY_CLI_PATH;
const std::string kConfigs = DUOPOLY_CONFIG_DIR;

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const fs::path tmp =
        fs::temp_directory_path() / ("duopoly_cli_out_" + std::to_string(::getpid()) + ".txt");
    const std::string cmd = kBin + " " + args + " > " + tmp.string() + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(tmp);
    return {WEXITSTATUS(rc), ss.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace

TEST_CASE("simulate leapfrogging set changes sign") {
    const auto r = run("simulate --config " + kConfigs + "/fig6.cfg");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() > 1);
    CHECK(rows[0] == std::vector<std::string>({"n", "z", "w", "x", "y"}));
    int changes = 0;
    double prev = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double z = std::stod(rows[i][1]);
        if (i > 1 && z * prev < 0.0) ++changes;
        prev = z;
    }
    CHECK(changes >= 2);
}

TEST_CASE("simulate monopoly set stays negative") {
    const auto r = run("simulate --config " + kConfigs + "/fig5.cfg");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 501);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::stod(rows[i][1]) < 0.0);   // z
        CHECK(std::stod(rows[i][2]) > 0.0);   // w
    }
}

TEST_CASE("simulate one step from the exact fixed point") {
    // (x, y) from the published fixed point of the chaotic set
    const auto r = run(
        "simulate --a 0.16 --b 0.9 --alpha 0.46 --beta 0.7 --c 105 "
        "--seed-x 0.0118222 --seed-y 0.0436998 --transient 1 --samples 1");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 2);
    CHECK(std::stod(rows[1][1]) == doctest::Approx(-0.0318776).epsilon(1e-4));
    CHECK(std::stod(rows[1][2]) == doctest::Approx(0.0555220).epsilon(1e-4));
}

TEST_CASE("fixed-points single c matches the published root") {
    const auto r = run("fixed-points --a 0.16 --b 0.9 --alpha 0.46 --beta 0.7 --c 105");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>(
                         {"c", "z0", "w0", "residual7a", "residual7b", "converged"}));
    CHECK(std::fabs(std::stod(rows[1][1]) + 0.0318776) <= 1e-5);
    CHECK(std::fabs(std::stod(rows[1][2]) - 0.0555220) <= 1e-5);
    CHECK(rows[1][5] == "true");
}

TEST_CASE("fixed-points sweep is monotone") {
    const auto r = run("fixed-points --config " + kConfigs + "/fig3.cfg");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 202);
    double prev_z = -1e300, prev_w = 1e300;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double z0 = std::stod(rows[i][1]);
        const double w0 = std::stod(rows[i][2]);
        CHECK(z0 < 0.0);
        CHECK(w0 > 0.0);
        CHECK(z0 >= prev_z);
        CHECK(w0 <= prev_w);
        prev_z = z0;
        prev_w = w0;
    }
}

TEST_CASE("bifurcation row count arithmetic") {
    const auto r = run(
        "bifurcation --a 0.16 --b 0.9 --alpha 0.46 --beta 0.7 "
        "--c-min 1 --c-max 2 --n-c 2 --samples 200");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    CHECK(rows.size() == 1 + 2 * 200);
    CHECK(rows[0] == std::vector<std::string>({"c", "sample_index", "z", "w", "period"}));
}

TEST_CASE("classify labels the chaotic set") {
    const auto r = run("classify --a 0.16 --b 0.9 --alpha 0.46 --beta 0.7 --c 105");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][5] == "chaotic");
}

TEST_CASE("stability reports the closed-form threshold") {
    const auto r = run("stability --a 0.16 --b 0.9 --alpha 0.46 --beta 0.7 --c 105");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("27.8918918919") != std::string::npos);
    CHECK(r.stdout_text.find("unstable") != std::string::npos);
}

TEST_CASE("json output mirrors the csv records") {
    const auto csv = run("fixed-points --a 0.16 --b 0.9 --alpha 0.46 --beta 0.7 --c 105");
    const auto js = run(
        "fixed-points --a 0.16 --b 0.9 --alpha 0.46 --beta 0.7 --c 105 --format json");
    REQUIRE(js.exit_code == 0);
    const auto arr = nlohmann::json::parse(js.stdout_text);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    const auto rows = parse_csv(csv.stdout_text);
    CHECK(arr[0]["z0"] == rows[1][1]);
    CHECK(arr[0]["w0"] == rows[1][2]);
    CHECK(arr[0]["converged"] == "true");
}

TEST_CASE("byte-identical output across repeated runs") {
    const std::string args = "simulate --config " + kConfigs + "/fig7.cfg";
    CHECK(run(args).stdout_text == run(args).stdout_text);
}

TEST_CASE("emitted csv re-parses to the producing values") {
    const auto r = run("simulate --config " + kConfigs + "/fig8.cfg --samples 50");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.stdout_text);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double z = std::stod(rows[i][1]);
        const double w = std::stod(rows[i][2]);
        const double x = std::stod(rows[i][3]);
        const double y = std::stod(rows[i][4]);
        // 12 significant digits round-trip well inside 1e-9
        CHECK(std::fabs(x - (w + z) / 2) <= 1e-9);
        CHECK(std::fabs(y - (w - z) / 2) <= 1e-9);
    }
}

TEST_CASE("error handling") {
    SUBCASE("missing parameters exit 2") {
        CHECK(run("simulate --c 10").exit_code == 2);
    }
    SUBCASE("invalid parameter value exits 2") {
        CHECK(run("simulate --a 0.16 --b 0.9 --alpha 2.0 --beta 0.7 --c 10").exit_code == 2);
    }
    SUBCASE("unknown config key exits 2") {
        const fs::path bad = fs::temp_directory_path() / "duopoly_bad.cfg";
        std::ofstream(bad) << "a = 0.16\nnot_a_key = 1\n";
        CHECK(run("simulate --config " + bad.string()).exit_code == 2);
        fs::remove(bad);
    }
    SUBCASE("malformed config value exits 2") {
        const fs::path bad = fs::temp_directory_path() / "duopoly_bad2.cfg";
        std::ofstream(bad) << "a = zebra\n";
        CHECK(run("simulate --config " + bad.string()).exit_code == 2);
        fs::remove(bad);
    }
    SUBCASE("unknown flag exits 2") {
        CHECK(run("simulate --frobnicate 1").exit_code == 2);
    }
    SUBCASE("flags override config values") {
        const auto r = run("classify --config " + kConfigs + "/fig5.cfg --c 105");
        REQUIRE(r.exit_code == 0);
        const auto rows = parse_csv(r.stdout_text);
        REQUIRE(rows.size() == 2);
        CHECK(rows[1][4] == "105");
        CHECK(rows[1][5] == "chaotic");
    }
}
