#include <complex>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atomcav/config.hpp"
#include "atomcav/csv.hpp"
#include "atomcav/dde.hpp"
#include "atomcav/experiments.hpp"
#include "atomcav/fullarray.hpp"
#include "atomcav/intensity.hpp"
#include "atomcav/residue.hpp"
#include "atomcav/spectral.hpp"

namespace fs = std::filesystem;
using namespace atomcav;

namespace {

struct Cli {
    std::string command;
    RunConfig cfg;
};

// Registers the shared flags on a subcommand; returns a callback that folds
// flag values over the config-file values (flags win).
void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--n", cfg.n, "atoms per mirror array");
    cmd->add_option("--eta", cfg.eta, "dimensionless delay gamma*d/v");
    cmd->add_option("--delta", cfg.delta, "emitter-mirror detuning (gamma)");
    cmd->add_option("--placement", cfg.placement, "none|node|antinode");
    cmd->add_option("--phi0", cfg.phi0, "propagation phase (rad), used when placement=none");
    cmd->add_option("--delta-c", cfg.delta_c, "detuning from nearest node-class mode (gamma)");
    cmd->add_option("--fringe-count", cfg.fringe_count, "carrier fringes K");
    cmd->add_option("--tmax", cfg.t_max, "integration horizon (1/gamma)");
    cmd->add_option("--steps-per-delay", cfg.steps_per_delay, "grid points per delay eta");
    cmd->add_option("--method", cfg.method, "heun|euler");
    cmd->add_option("--omega-min", cfg.omega_min, "frequency window lower edge");
    cmd->add_option("--omega-max", cfg.omega_max, "frequency window upper edge");
    cmd->add_option("--omega-points", cfg.omega_points, "frequency grid size");
    cmd->add_option("--grid-points", cfg.grid_points, "scan grid for |D0| minima");
    cmd->add_option("--x-min", cfg.x_min, "intensity x window lower edge");
    cmd->add_option("--x-max", cfg.x_max, "intensity x window upper edge");
    cmd->add_option("--x-points", cfg.x_points, "intensity x grid size");
    cmd->add_option("--t-points", cfg.t_points, "intensity t grid size");
    cmd->add_option("--p-per-side", cfg.p_per_side, "poles per side in reconstruction");
    cmd->add_option("--sweep-kind", cfg.sweep_kind, "eta|deltac|delta");
    cmd->add_option("--sweep-from", cfg.sweep_from, "sweep axis start");
    cmd->add_option("--sweep-to", cfg.sweep_to, "sweep axis end");
    cmd->add_option("--sweep-points", cfg.sweep_points, "sweep axis size");
    cmd->add_option("--out", cfg.out_dir, "output directory");
    cmd->add_option("--format", cfg.format, "csv|bin (intensity)");
    cmd->add_option("--jobs", cfg.jobs, "worker threads (0: auto, env ATOMCAV_JOBS)");
}

fs::path prepare_out(const RunConfig& cfg) {
    fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    return dir;
}

AmplitudeTrajectory run_dde(const RunConfig& cfg) {
    return integrate_collective(effective_params(cfg), cfg.t_max,
                                cfg.steps_per_delay, method_of(cfg));
}

PoleSet run_poles(const RunConfig& cfg) {
    const SystemParams p = effective_params(cfg);
    PoleSet set = find_poles(p, cfg.omega_min, cfg.omega_max, cfg.grid_points);
    for (const Complex& s : set.failed_seeds)
        std::cerr << "warning: Muller did not converge from seed " << s.real()
                  << (s.imag() < 0 ? "-" : "+") << std::abs(s.imag()) << "i\n";
    if (set.poles.empty())
        throw Error(ErrorCode::NoConvergence, "no pole converged in the window");
    return set;
}

int cmd_simulate(const RunConfig& cfg) {
    const fs::path dir = prepare_out(cfg);
    const AmplitudeTrajectory traj = run_dde(cfg);
    write_trajectory_csv((dir / "trajectory.csv").string(), traj);
    write_manifest((dir / "simulate-manifest.json").string(), cfg, "simulate");
    std::cout << "trajectory: " << (dir / "trajectory.csv").string() << " ("
              << traj.size() << " samples)\n";
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    const fs::path dir = prepare_out(cfg);
    const SystemParams p = effective_params(cfg);
    const std::vector<double> grid =
        linspace(cfg.omega_min, cfg.omega_max, cfg.omega_points);
    const SpectralResponse resp = response_f0(grid, p);
    write_spectrum_csv((dir / "spectrum.csv").string(), resp);
    write_manifest((dir / "spectrum-manifest.json").string(), cfg, "spectrum");
    std::cout << "spectrum: " << (dir / "spectrum.csv").string() << "\n";
    return 0;
}

int cmd_poles(const RunConfig& cfg) {
    const fs::path dir = prepare_out(cfg);
    const PoleSet set = run_poles(cfg);
    write_poles_csv((dir / "poles.csv").string(), set);
    write_manifest((dir / "poles-manifest.json").string(), cfg, "poles");
    for (const Pole& p : set.poles)
        std::cout << "pole " << format_double(p.omega.real()) << " "
                  << format_double(p.omega.imag()) << "i  |D0| = " << p.residual
                  << "\n";
    return 0;
}

int cmd_reconstruct(const RunConfig& cfg) {
    const fs::path dir = prepare_out(cfg);
    const PoleSet set = run_poles(cfg);
    const AmplitudeTrajectory traj = run_dde(cfg);
    const Reconstruction rec =
        reconstruct(set, traj.times, cfg.p_per_side, &traj);
    write_reconstruction_csv((dir / "reconstruction.csv").string(), rec);
    write_manifest((dir / "reconstruct-manifest.json").string(), cfg, "reconstruct");
    std::cout << "poles used: " << rec.poles_used.size()
              << ", max |c0_approx - c0| = " << rec.max_error << "\n";
    return 0;
}

int cmd_intensity(const RunConfig& cfg) {
    const fs::path dir = prepare_out(cfg);
    RunConfig run = cfg;
    double max_abs_x = std::max(std::abs(cfg.x_min), std::abs(cfg.x_max));
    run.t_max = cfg.t_max + max_abs_x + effective_params(cfg).eta + 1.0;
    const AmplitudeTrajectory traj = run_dde(run);
    const std::vector<double> xg = linspace(cfg.x_min, cfg.x_max, cfg.x_points);
    const std::vector<double> tg = linspace(0.0, cfg.t_max, cfg.t_points);
    const IntensityMap map = intensity_map(traj, xg, tg, effective_jobs(cfg));
    if (cfg.format == "bin")
        write_intensity_bin((dir / "intensity.bin").string(), map);
    else
        write_intensity_csv((dir / "intensity.csv").string(), map);
    write_manifest((dir / "intensity-manifest.json").string(), cfg, "intensity");
    std::cout << "intensity map " << map.t.size() << "x" << map.x.size() << "\n";
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    const fs::path dir = prepare_out(cfg);
    const SystemParams base = effective_params(cfg);
    const std::vector<double> axis =
        linspace(cfg.sweep_from, cfg.sweep_to, cfg.sweep_points);
    const std::vector<double> omega =
        linspace(cfg.omega_min, cfg.omega_max, cfg.omega_points);
    SweepResult sweep;
    const int jobs = effective_jobs(cfg);
    if (cfg.sweep_kind == "eta")
        sweep = sweep_eta_density(base, axis, omega, jobs);
    else if (cfg.sweep_kind == "deltac")
        sweep = sweep_deltac(base, axis, omega, jobs);
    else
        sweep = sweep_delta(base, axis, omega, jobs);
    write_sweep_csv((dir / "sweep.csv").string(), sweep);
    write_manifest((dir / "sweep-manifest.json").string(), cfg, "sweep");
    std::cout << "sweep rows: " << sweep.axis.size() << "\n";
    return 0;
}

int cmd_oracle_check(const RunConfig& cfg) {
    const SystemParams p = effective_params(cfg);
    const double dev =
        oracle_deviation(p, cfg.t_max, cfg.steps_per_delay, method_of(cfg));
    std::cout << "max |full-array projection - collective| = " << dev << "\n";
    if (dev > 1e-8)
        throw Error(ErrorCode::NoConvergence, "oracle deviation exceeds 1e-8");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"atomcav: emitter between atomic-array mirrors in a waveguide"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)")
        ->check(CLI::ExistingFile);

    RunConfig flags;  // filled by CLI11; merged over file values below
    std::vector<std::pair<std::string, CLI::App*>> cmds;
    for (const char* name : {"simulate", "spectrum", "poles", "reconstruct",
                             "intensity", "sweep", "oracle-check"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common_flags(sub, flags);
        cmds.emplace_back(name, sub);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        CLI::App* active = nullptr;
        std::string command;
        for (auto& [name, sub] : cmds)
            if (sub->parsed()) {
                active = sub;
                command = name;
            }
        // flags override file values field by field
        auto merge = [&](const char* flag, auto RunConfig::* member) {
            if (active->count(flag) > 0) cfg.*member = flags.*member;
        };
        merge("--n", &RunConfig::n);
        merge("--eta", &RunConfig::eta);
        merge("--delta", &RunConfig::delta);
        merge("--placement", &RunConfig::placement);
        merge("--phi0", &RunConfig::phi0);
        merge("--delta-c", &RunConfig::delta_c);
        merge("--fringe-count", &RunConfig::fringe_count);
        merge("--tmax", &RunConfig::t_max);
        merge("--steps-per-delay", &RunConfig::steps_per_delay);
        merge("--method", &RunConfig::method);
        merge("--omega-min", &RunConfig::omega_min);
        merge("--omega-max", &RunConfig::omega_max);
        merge("--omega-points", &RunConfig::omega_points);
        merge("--grid-points", &RunConfig::grid_points);
        merge("--x-min", &RunConfig::x_min);
        merge("--x-max", &RunConfig::x_max);
        merge("--x-points", &RunConfig::x_points);
        merge("--t-points", &RunConfig::t_points);
        merge("--p-per-side", &RunConfig::p_per_side);
        merge("--sweep-kind", &RunConfig::sweep_kind);
        merge("--sweep-from", &RunConfig::sweep_from);
        merge("--sweep-to", &RunConfig::sweep_to);
        merge("--sweep-points", &RunConfig::sweep_points);
        merge("--out", &RunConfig::out_dir);
        merge("--format", &RunConfig::format);
        merge("--jobs", &RunConfig::jobs);

        cfg = resolve(cfg);

        if (command == "simulate") return cmd_simulate(cfg);
        if (command == "spectrum") return cmd_spectrum(cfg);
        if (command == "poles") return cmd_poles(cfg);
        if (command == "reconstruct") return cmd_reconstruct(cfg);
        if (command == "intensity") return cmd_intensity(cfg);
        if (command == "sweep") return cmd_sweep(cfg);
        if (command == "oracle-check") return cmd_oracle_check(cfg);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << error_name(e.code()) << ": " << e.what() << "\n";
        const bool numerical = e.code() == ErrorCode::NoConvergence ||
                               e.code() == ErrorCode::NonFiniteAmplitude;
        return numerical ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
