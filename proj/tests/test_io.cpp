#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "atomcav/config.hpp"
#include "atomcav/csv.hpp"
#include "atomcav/dde.hpp"
#include "atomcav/spectral.hpp"
#include "helpers.hpp"

using namespace atomcav;
using atomcav::testing::params;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("atomcav_test_" + std::to_string(std::rand()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

} // namespace

TEST_CASE("trajectory CSV round-trips losslessly at 17 digits") {
    const AmplitudeTrajectory traj =
        integrate_collective(params(30, 0.7, 1.1, Placement::antinode), 3.0, 300);
    TempDir tmp;
    write_trajectory_csv(tmp.file("t.csv"), traj);
    const AmplitudeTrajectory back = read_trajectory_csv(tmp.file("t.csv"));
    REQUIRE(back.size() == traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        CHECK(back.times[k] == traj.times[k]);
        CHECK(back.c0[k] == traj.c0[k]);
        CHECK(back.c_lm[k] == traj.c_lm[k]);
        CHECK(back.c_rm[k] == traj.c_rm[k]);
    }
}

TEST_CASE("spectrum and poles CSV round-trips") {
    const auto p = params(100, 1.0, 0.0, Placement::antinode);
    TempDir tmp;

    const SpectralResponse resp = response_f0(linspace(-10.0, 10.0, 101), p);
    write_spectrum_csv(tmp.file("s.csv"), resp);
    const SpectralResponse resp2 = read_spectrum_csv(tmp.file("s.csv"));
    REQUIRE(resp2.omega.size() == resp.omega.size());
    for (std::size_t i = 0; i < resp.omega.size(); ++i) {
        CHECK(resp2.f0[i] == resp.f0[i]);
        CHECK(resp2.density[i] == resp.density[i]);
    }

    const PoleSet set = find_poles(p, -10.0, 10.0, 4001);
    write_poles_csv(tmp.file("p.csv"), set);
    const PoleSet set2 = read_poles_csv(tmp.file("p.csv"));
    REQUIRE(set2.poles.size() == set.poles.size());
    for (std::size_t i = 0; i < set.poles.size(); ++i) {
        CHECK(set2.poles[i].omega == set.poles[i].omega);
        CHECK(set2.poles[i].weight == set.poles[i].weight);
    }
}

TEST_CASE("binary intensity dump round-trips") {
    IntensityMap map;
    map.x = {0.0, 0.5, 1.0};
    map.t = {0.0, 1.0};
    map.values = {0.0, 0.25, 1.0, 0.125, 3.5, 0.75};
    TempDir tmp;
    write_intensity_bin(tmp.file("i.bin"), map);
    const IntensityMap back = read_intensity_bin(tmp.file("i.bin"));
    REQUIRE(back.values.size() == 6);
    CHECK(back.t.size() == 2);
    CHECK(back.x.size() == 3);
    for (std::size_t i = 0; i < 6; ++i) CHECK(back.values[i] == map.values[i]);
}

TEST_CASE("minimal config fills defaults") {
    TempDir tmp;
    std::ofstream(tmp.file("c.json")) << R"({"n":100,"eta":1.0,"placement":"node"})";
    const RunConfig cfg = resolve(load_config(tmp.file("c.json")));
    CHECK(cfg.n == 100);
    CHECK(cfg.placement == "node");
    CHECK(cfg.steps_per_delay == 2000);
    CHECK(cfg.method == "heun");
    CHECK(cfg.fringe_count == 20);
    CHECK(cfg.omega_max > 0.0);  // auto window resolved
}

TEST_CASE("unknown config keys are rejected") {
    TempDir tmp;
    std::ofstream(tmp.file("c.json")) << R"({"n":100,"gamma_units":1.0})";
    try {
        load_config(tmp.file("c.json"));
        FAIL("expected UnknownKey");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownKey);
    }
}

TEST_CASE("malformed JSON raises ParseError") {
    TempDir tmp;
    std::ofstream(tmp.file("c.json")) << "{ not json";
    try {
        load_config(tmp.file("c.json"));
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("bad enum strings raise ValidationError") {
    RunConfig cfg;
    cfg.method = "rk4";
    try {
        resolve(cfg);
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ValidationError);
    }
}

TEST_CASE("manifest reloads into an identical run") {
    TempDir tmp;
    RunConfig cfg;
    cfg.n = 40;
    cfg.eta = 0.8;
    cfg.placement = "antinode";
    cfg.t_max = 2.0;
    cfg.steps_per_delay = 300;
    cfg = resolve(cfg);
    write_manifest(tmp.file("m.json"), cfg, "simulate");

    const RunConfig cfg2 = resolve(load_config(tmp.file("m.json")));
    const AmplitudeTrajectory a = integrate_collective(
        effective_params(cfg), cfg.t_max, cfg.steps_per_delay, method_of(cfg));
    const AmplitudeTrajectory b = integrate_collective(
        effective_params(cfg2), cfg2.t_max, cfg2.steps_per_delay, method_of(cfg2));
    write_trajectory_csv(tmp.file("a.csv"), a);
    write_trajectory_csv(tmp.file("b.csv"), b);
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
}

TEST_CASE("CLI: flag precedence, outputs and exit codes") {
    const char* bin = std::getenv("ATOMCAV_BIN");
    if (bin == nullptr) return;  // available only under ctest
    TempDir tmp;
    std::ofstream(tmp.file("c.json"))
        << R"({"n":20,"eta":1.0,"placement":"antinode","t_max":1.0,"steps_per_delay":100})";

    SUBCASE("flags override the config file") {
        const std::string cmd = std::string(bin) + " --config " + tmp.file("c.json") +
                                " simulate --eta 2 --out " + tmp.file("out") +
                                " > /dev/null";
        REQUIRE(std::system(cmd.c_str()) == 0);
        const RunConfig eff =
            load_config((fs::path(tmp.file("out")) / "simulate-manifest.json").string());
        CHECK(eff.eta == 2.0);
        CHECK(eff.n == 20);
        CHECK(fs::exists(fs::path(tmp.file("out")) / "trajectory.csv"));
    }

    SUBCASE("validation failures exit with 1") {
        const std::string cmd = std::string(bin) + " simulate --eta -3 --out " +
                                tmp.file("out2") + " 2> /dev/null";
        CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 1);
    }

    SUBCASE("oracle-check exits 0 in the equivalence regime") {
        const std::string cmd = std::string(bin) +
                                " oracle-check --n 3 --eta 0.5 --placement antinode"
                                " --tmax 2 --steps-per-delay 100 > /dev/null";
        CHECK(std::system(cmd.c_str()) == 0);
    }
}
