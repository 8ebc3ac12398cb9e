#ifndef ATOMCAV_CONFIG_HPP
#define ATOMCAV_CONFIG_HPP

#include <string>

#include "atomcav/dde.hpp"
#include "atomcav/model.hpp"

namespace atomcav {

// Fully-resolved run configuration. The JSON schema mirrors the field names;
// unknown keys are rejected. Every run writes the resolved config back into
// its manifest so a run can be reproduced from the manifest alone.
struct RunConfig {
    // physical parameters
    int n = 100;
    double eta = 1.0;
    double delta = 0.0;
    std::string placement = "none";  // none|node|antinode (none: use phi0)
    double phi0 = 3.14159265358979323846;
    double delta_c = 0.0;
    int fringe_count = 20;

    // integration
    double t_max = 10.0;
    int steps_per_delay = 2000;
    std::string method = "heun";  // heun|euler

    // spectral grids (omega window 0,0 means auto from default_window)
    double omega_min = 0.0;
    double omega_max = 0.0;
    int omega_points = 2000;
    int grid_points = 16001;

    // intensity grids (x window 0,0 means auto)
    double x_min = 0.0;
    double x_max = 0.0;
    int x_points = 800;
    int t_points = 800;

    // residue reconstruction
    int p_per_side = 3;

    // sweep axis
    std::string sweep_kind = "eta";  // eta|deltac|delta
    double sweep_from = 0.005;
    double sweep_to = 2.0;
    int sweep_points = 100;

    // output
    std::string out_dir = "./out";
    std::string format = "csv";  // csv|bin (intensity only)
    int jobs = 0;                // 0: hardware_concurrency (or ATOMCAV_JOBS)
};

RunConfig load_config(const std::string& path);
// Applies defaults for auto windows and validates enum-ish strings.
RunConfig resolve(RunConfig cfg);
SystemParams effective_params(const RunConfig& cfg);
Method method_of(const RunConfig& cfg);
int effective_jobs(const RunConfig& cfg);
std::string config_to_json(const RunConfig& cfg);  // object under key "config"
void write_manifest(const std::string& path, const RunConfig& cfg,
                    const std::string& command);

} // namespace atomcav

#endif
