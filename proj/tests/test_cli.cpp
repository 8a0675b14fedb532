#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using Catch::Approx;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("opdyn_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

int run_cli(const TempDir& dir, const std::string& args) {
    const std::string cmd = "cd '" + dir.path.string() + "' && '" + OPDYN_CLI_PATH +
                            "' " + args + " > stdout.txt 2> stderr.txt";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.push_back("");
        rows.push_back(cells);
    }
    return rows;
}

const char* kFixtureConfig = R"({
  "graph": {"edge_list_path": "two_agent.edges", "n": 2},
  "model": {
    "s": [0.5, -0.5],
    "beta": 1.0,
    "conf": {"family": "tanh-quadratic", "params": {"chi": 0.6, "gamma": 0.011}},
    "neg": {"family": "neg-tanh-quadratic", "params": {"chi": 0.1, "gamma": 0.05}},
    "norm": {"mode": "rescale", "alpha_target": 0.2}
  },
  "x0": {"values": [0.5, -0.5]},
  "run": {"K": 6, "conv_tol": 0.0},
  "output": {"csv": "traj.csv", "json": "traj.json"}
})";

void write_fixture(const TempDir& dir) {
    spit(dir.path / "two_agent.edges", "0 1 1.0\n1 0 1.0\n");
    spit(dir.path / "fixture.json", kFixtureConfig);
}

}  // namespace

TEST_CASE("cli simulate: fixture trajectory matches the hand-computed step") {
    TempDir dir;
    write_fixture(dir);
    CHECK(run_cli(dir, "simulate --config fixture.json") == 0);

    const auto rows = read_csv(dir.path / "traj.csv");
    REQUIRE(rows.size() >= 3);
    CHECK(rows[0] == std::vector<std::string>{"k", "x_0", "x_1", "alpha_0", "alpha_1"});
    CHECK(rows[1][0] == "0");
    CHECK(rows[1][3].empty());  // no alpha for the initial state
    CHECK(std::stod(rows[2][1]) == Approx(0.1031568185946414).margin(1e-9));
    CHECK(std::stod(rows[2][2]) == Approx(-0.1031568185946414).margin(1e-9));
    CHECK(std::stod(rows[2][3]) == Approx(0.2).margin(1e-12));

    const auto doc = json::parse(slurp(dir.path / "traj.json"));
    CHECK(doc.contains("config"));
    CHECK(doc.at("states").size() == rows.size() - 1);
    CHECK(doc.at("alphas").size() == doc.at("states").size() - 1);
}

TEST_CASE("cli simulate: K = 0 emits a single data row") {
    TempDir dir;
    write_fixture(dir);
    auto cfg = json::parse(kFixtureConfig);
    cfg["run"]["K"] = 0;
    spit(dir.path / "fixture.json", cfg.dump());
    CHECK(run_cli(dir, "simulate --config fixture.json") == 0);
    const auto rows = read_csv(dir.path / "traj.csv");
    REQUIRE(rows.size() == 2);  // header + k=0
    CHECK(rows[1][0] == "0");
}

TEST_CASE("cli simulate: reruns are byte-identical") {
    TempDir dir;
    write_fixture(dir);
    CHECK(run_cli(dir, "simulate --config fixture.json --out-dir a") == 0);
    CHECK(run_cli(dir, "simulate --config fixture.json --out-dir b") == 0);
    CHECK(slurp(dir.path / "a" / "traj.csv") == slurp(dir.path / "b" / "traj.csv"));
    CHECK(slurp(dir.path / "a" / "traj.json") == slurp(dir.path / "b" / "traj.json"));
    CHECK_FALSE(slurp(dir.path / "a" / "traj.csv").empty());
}

TEST_CASE("cli simulate: missing files exit 1 and name the path") {
    TempDir dir;
    write_fixture(dir);
    auto cfg = json::parse(kFixtureConfig);
    cfg["graph"]["edge_list_path"] = "no_such.edges";
    spit(dir.path / "fixture.json", cfg.dump());
    CHECK(run_cli(dir, "simulate --config fixture.json") == 1);
    CHECK(slurp(dir.path / "stderr.txt").find("no_such.edges") != std::string::npos);

    CHECK(run_cli(dir, "simulate --config absent.json") == 1);
    CHECK(slurp(dir.path / "stderr.txt").find("absent.json") != std::string::npos);
}

TEST_CASE("cli simulate: strict infeasibility exits 2") {
    TempDir dir;
    write_fixture(dir);
    auto cfg = json::parse(kFixtureConfig);
    cfg["model"]["norm"] = {{"mode", "strict"}};
    spit(dir.path / "fixture.json", cfg.dump());
    CHECK(run_cli(dir, "simulate --config fixture.json") == 2);
    CHECK(slurp(dir.path / "stderr.txt").find("infeasible") != std::string::npos);
}

TEST_CASE("cli simulate: schema violation exits 1") {
    TempDir dir;
    write_fixture(dir);
    auto cfg = json::parse(kFixtureConfig);
    cfg["model"].erase("conf");
    spit(dir.path / "fixture.json", cfg.dump());
    CHECK(run_cli(dir, "simulate --config fixture.json") == 1);
}

TEST_CASE("cli check: exit codes and report content") {
    TempDir dir;
    CHECK(run_cli(dir, "check --family tanh-quadratic --params chi=0.6,gamma=0.011 "
                       "--which confirmation --resolution 41 --out rep.json") == 0);

    CHECK(run_cli(dir, "check --family linear-symmetric --params beta=0.6,gamma=0.5 "
                       "--which confirmation --out rep.json") == 3);
    const auto rep = json::parse(slurp(dir.path / "rep.json"));
    bool found = false;
    for (const auto& it : rep.at("items")) {
        if (it.at("item") != "7a-2") continue;
        CHECK(it.at("status") == "fail");
        for (const auto& w : it.at("witnesses")) {
            found = found ||
                    (std::fabs(w.at("x_i").get<double>() - 0.1) < 1e-12 &&
                     std::fabs(w.at("x_j").get<double>() - 0.5) < 1e-12 &&
                     std::fabs(w.at("x_d").get<double>() + 0.3) < 1e-12);
        }
    }
    CHECK(found);

    CHECK(run_cli(dir, "check --family cubic-abs --params chi=0.6,gamma=0.1 "
                       "--which theorem1 --orientation as-written") == 0);
    CHECK(run_cli(dir, "check --family cubic-abs --params chi=0.6,gamma=0.1 "
                       "--which theorem1 --orientation corrected") == 3);
    CHECK(run_cli(dir, "check --family neg-tanh-quadratic --params chi=0.1,gamma=0.05 "
                       "--which negativity") == 0);
}

TEST_CASE("cli check: invalid input exits 1") {
    TempDir dir;
    CHECK(run_cli(dir, "check --family tanh-quadratic --params chi=0.1,gamma=0.05 "
                       "--which confirmation") == 1);  // negative at corners
    CHECK(run_cli(dir, "check --family hk-indicator --params eps_lo=-0.5,eps_hi=0.5,a=1 "
                       "--which theorem1") == 1);       // no decomposition
    CHECK(run_cli(dir, "check --family tanh-quadratic --params chi=0.6,gamma=bad "
                       "--which confirmation") == 1);
    CHECK(run_cli(dir, "check --family tanh-quadratic --params chi=0.6,gamma=0.011 "
                       "--which nonsense") == 1);
    CHECK(run_cli(dir, "check --family tanh-quadratic --params chi=0.6,gamma=0.011 "
                       "--which confirmation --resolution 40") == 1);  // even grid
    CHECK(run_cli(dir, "check --family tanh-quadratic") == 1);  // missing --which
}

TEST_CASE("cli surface: grid export") {
    TempDir dir;
    CHECK(run_cli(dir, "surface --family tanh-quadratic --params chi=0.6,gamma=0.011 "
                       "--resolution 41 --out surf.csv") == 0);
    const auto rows = read_csv(dir.path / "surf.csv");
    REQUIRE(rows.size() == 1682);  // header + 41*41
    CHECK(rows[0] == std::vector<std::string>{"x_i", "x_j", "c"});

    std::string c_pos, c_neg;
    bool found_ref = false;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const double xi = std::stod(rows[r][0]);
        const double xj = std::stod(rows[r][1]);
        if (std::fabs(xi - 0.2) < 1e-12 && std::fabs(xj - 0.8) < 1e-12) {
            found_ref = true;
            CHECK(std::stod(rows[r][2]) == Approx(0.597604498001482).margin(1e-12));
        }
        if (xi == 0.0 && std::fabs(xj - 0.5) < 1e-12) c_pos = rows[r][2];
        if (xi == 0.0 && std::fabs(xj + 0.5) < 1e-12) c_neg = rows[r][2];
    }
    CHECK(found_ref);
    REQUIRE_FALSE(c_pos.empty());
    CHECK(c_pos == c_neg);  // textual equality: mirrored weights are identical

    CHECK(run_cli(dir, "surface --family tanh-quadratic --params chi=0.6,gamma=0.011 "
                       "--resolution 2 --out tiny.csv") == 0);
    CHECK(read_csv(dir.path / "tiny.csv").size() == 5);  // header + corners

    CHECK(run_cli(dir, "surface --family tanh-quadratic --params chi=0.6,gamma=0.011 "
                       "--resolution 5 --out /nonexistent_dir_zz/s.csv") == 1);
}

TEST_CASE("cli baselines: demonstrations carry the canonical values") {
    TempDir dir;
    CHECK(run_cli(dir, "baselines --out base.json") == 0);
    const std::string out = slurp(dir.path / "stdout.txt");

    std::size_t hits = 0, at = 0;
    while ((at = out.find("(0.1, 0.5, -0.3)", at)) != std::string::npos) {
        ++hits;
        at += 1;
    }
    CHECK(hits == 2);
    CHECK(out.find("satisfied") != std::string::npos);
    CHECK(out.find("0.42") != std::string::npos);
    CHECK(out.find("0.58") != std::string::npos);

    const auto doc = json::parse(slurp(dir.path / "base.json"));
    CHECK(doc.at("linear_symmetric").at("c_j").get<double>() ==
          doc.at("linear_symmetric").at("c_d").get<double>());
    CHECK(doc.at("hk_indicator").at("band_condition") == true);
    CHECK(doc.at("dandekar").at("coef_01").get<double>() == Approx(0.2).margin(1e-12));
    CHECK(doc.at("dandekar").at("coef_09").get<double>() == Approx(0.2).margin(1e-12));
}

TEST_CASE("cli: no subcommand exits 1") {
    TempDir dir;
    CHECK(run_cli(dir, "") == 1);
}
