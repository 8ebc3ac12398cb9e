#include "atomcav/config.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>

#include <json.hpp>

#include "atomcav/spectral.hpp"

namespace atomcav {

using nlohmann::json;

namespace {

json to_json_object(const RunConfig& c) {
    return json{{"n", c.n},
                {"eta", c.eta},
                {"delta", c.delta},
                {"placement", c.placement},
                {"phi0", c.phi0},
                {"delta_c", c.delta_c},
                {"fringe_count", c.fringe_count},
                {"t_max", c.t_max},
                {"steps_per_delay", c.steps_per_delay},
                {"method", c.method},
                {"omega_min", c.omega_min},
                {"omega_max", c.omega_max},
                {"omega_points", c.omega_points},
                {"grid_points", c.grid_points},
                {"x_min", c.x_min},
                {"x_max", c.x_max},
                {"x_points", c.x_points},
                {"t_points", c.t_points},
                {"p_per_side", c.p_per_side},
                {"sweep_kind", c.sweep_kind},
                {"sweep_from", c.sweep_from},
                {"sweep_to", c.sweep_to},
                {"sweep_points", c.sweep_points},
                {"out_dir", c.out_dir},
                {"format", c.format},
                {"jobs", c.jobs}};
}

void from_json_object(const json& j, RunConfig& c) {
    static const std::set<std::string> known = {
        "n",          "eta",           "delta",        "placement",
        "phi0",       "delta_c",       "fringe_count", "t_max",
        "steps_per_delay", "method",   "omega_min",    "omega_max",
        "omega_points", "grid_points", "x_min",        "x_max",
        "x_points",   "t_points",      "p_per_side",   "sweep_kind",
        "sweep_from", "sweep_to",      "sweep_points", "out_dir",
        "format",     "jobs"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key))
            throw Error(ErrorCode::UnknownKey, "unknown config key: " + key);
        (void)value;
    }
    auto get = [&j](const char* key, auto& field) {
        if (j.contains(key)) j.at(key).get_to(field);
    };
    get("n", c.n);
    get("eta", c.eta);
    get("delta", c.delta);
    get("placement", c.placement);
    get("phi0", c.phi0);
    get("delta_c", c.delta_c);
    get("fringe_count", c.fringe_count);
    get("t_max", c.t_max);
    get("steps_per_delay", c.steps_per_delay);
    get("method", c.method);
    get("omega_min", c.omega_min);
    get("omega_max", c.omega_max);
    get("omega_points", c.omega_points);
    get("grid_points", c.grid_points);
    get("x_min", c.x_min);
    get("x_max", c.x_max);
    get("x_points", c.x_points);
    get("t_points", c.t_points);
    get("p_per_side", c.p_per_side);
    get("sweep_kind", c.sweep_kind);
    get("sweep_from", c.sweep_from);
    get("sweep_to", c.sweep_to);
    get("sweep_points", c.sweep_points);
    get("out_dir", c.out_dir);
    get("format", c.format);
    get("jobs", c.jobs);
}

} // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open config: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("config parse: ") + e.what());
    }
    // accept either a bare config object or a manifest {"config": {...}, "meta": ...}
    const json* obj = &j;
    if (j.contains("config")) obj = &j.at("config");
    RunConfig cfg;
    try {
        from_json_object(*obj, cfg);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("config types: ") + e.what());
    }
    return cfg;
}

RunConfig resolve(RunConfig cfg) {
    if (cfg.method != "heun" && cfg.method != "euler")
        throw Error(ErrorCode::ValidationError, "method must be heun or euler");
    if (cfg.placement != "none" && cfg.placement != "node" && cfg.placement != "antinode")
        throw Error(ErrorCode::ValidationError, "placement must be none, node or antinode");
    if (cfg.sweep_kind != "eta" && cfg.sweep_kind != "deltac" && cfg.sweep_kind != "delta")
        throw Error(ErrorCode::ValidationError, "sweep_kind must be eta, deltac or delta");
    if (cfg.format != "csv" && cfg.format != "bin")
        throw Error(ErrorCode::ValidationError, "format must be csv or bin");
    if (cfg.omega_points < 2 || cfg.grid_points < 3 || cfg.x_points < 1 ||
        cfg.t_points < 1 || cfg.sweep_points < 1)
        throw Error(ErrorCode::ValidationError, "grid point counts must be positive");
    if (cfg.p_per_side < 0)
        throw Error(ErrorCode::ValidationError, "p_per_side must be >= 0");

    const SystemParams p = effective_params(cfg);  // validates physical fields
    cfg.phi0 = p.phi0;                             // resolved placement phase
    if (cfg.omega_min == 0.0 && cfg.omega_max == 0.0) {
        const double w = default_window(p);
        cfg.omega_min = -w;
        cfg.omega_max = w;
    }
    if (cfg.x_min == 0.0 && cfg.x_max == 0.0) {
        const double span = 2.0 * std::max(p.eta, 1.0);
        cfg.x_min = -span;
        cfg.x_max = span;
    }
    if (!(cfg.omega_max > cfg.omega_min) || !(cfg.x_max > cfg.x_min))
        throw Error(ErrorCode::ValidationError, "empty omega or x window");
    return cfg;
}

SystemParams effective_params(const RunConfig& cfg) {
    SystemParams p;
    p.n_atoms = cfg.n;
    p.eta = cfg.eta;
    p.delta = cfg.delta;
    p.phi0 = cfg.phi0;
    p.delta_c = cfg.delta_c;
    p.fringe_count = cfg.fringe_count;
    if (cfg.placement == "node") p = make_placement(Placement::node, p);
    if (cfg.placement == "antinode") p = make_placement(Placement::antinode, p);
    return validate(p);
}

Method method_of(const RunConfig& cfg) {
    return cfg.method == "euler" ? Method::euler : Method::heun;
}

int effective_jobs(const RunConfig& cfg) {
    if (cfg.jobs > 0) return cfg.jobs;
    if (const char* env = std::getenv("ATOMCAV_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string config_to_json(const RunConfig& cfg) {
    return to_json_object(cfg).dump(2);
}

void write_manifest(const std::string& path, const RunConfig& cfg,
                    const std::string& command) {
    const auto now = std::chrono::system_clock::now();
    json manifest{
        {"config", to_json_object(cfg)},
        {"meta",
         {{"command", command},
          {"unix_time",
           std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
               .count()}}}};
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ValidationError, "cannot write manifest: " + path);
    out << manifest.dump(2) << '\n';
}

} // namespace atomcav
