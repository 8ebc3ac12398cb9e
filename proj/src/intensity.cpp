#include "atomcav/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace atomcav {

namespace {

double theta(double u) { return u >= 0.0 ? 1.0 : 0.0; }  // Theta(0) = 1

struct Carriers {
    double omega0;
    double omega_m;
};

Carriers carriers_of(const SystemParams& p) {
    // omega_0*d/v = phi0 + 2*pi*K; for eta = 0 fall back to 2*pi*K per unit
    // length so the fringe knob keeps meaning.
    const double total = p.phi0 + 2.0 * std::numbers::pi * p.fringe_count;
    const double omega0 = p.eta > 0.0 ? total / p.eta
                                      : 2.0 * std::numbers::pi * p.fringe_count;
    return {omega0, omega0 - p.delta};
}

} // namespace

std::pair<Complex, Complex> directional_split(const AmplitudeTrajectory& traj,
                                              double x, double t) {
    const SystemParams& p = traj.params;
    const Carriers car = carriers_of(p);
    const double d = p.eta;
    const double sqn = std::sqrt(static_cast<double>(p.n_atoms));

    auto term = [&](auto&& amp, double arg, double gate, double omega) -> Complex {
        const double bracket = theta(arg) - theta(gate);
        if (bracket == 0.0) return {0.0, 0.0};
        return amp(arg) * std::polar(1.0, -omega * arg) * bracket;
    };
    auto c0 = [&traj](double s) { return traj.interp_c0(s); };
    auto clm = [&traj](double s) { return traj.interp_c_lm(s); };
    auto crm = [&traj](double s) { return traj.interp_c_rm(s); };

    Complex right = term(c0, t - x, -x, car.omega0);
    right += sqn * term(clm, t - (x + d), -(x + d), car.omega_m);
    right += sqn * term(crm, t - (x - d), -(x - d), car.omega_m);

    Complex left = term(c0, t + x, x, car.omega0);
    left += sqn * term(clm, t + (x + d), x + d, car.omega_m);
    left += sqn * term(crm, t + (x - d), x - d, car.omega_m);
    return {right, left};
}

IntensityMap intensity_map(const AmplitudeTrajectory& traj,
                           std::span<const double> x_grid,
                           std::span<const double> t_grid, int jobs) {
    if (x_grid.empty() || t_grid.empty())
        throw Error(ErrorCode::ValidationError, "empty intensity grid");
    double max_abs_x = 0.0;
    for (double x : x_grid) max_abs_x = std::max(max_abs_x, std::abs(x));
    const double t_need =
        *std::max_element(t_grid.begin(), t_grid.end()) + max_abs_x + traj.params.eta;
    if (traj.t_max() + 1e-9 < t_need)
        throw Error(ErrorCode::TrajectoryTooShort,
                    "trajectory covers t <= " + std::to_string(traj.t_max()) +
                        " but the map needs " + std::to_string(t_need));

    IntensityMap map;
    map.x.assign(x_grid.begin(), x_grid.end());
    map.t.assign(t_grid.begin(), t_grid.end());
    map.values.resize(map.x.size() * map.t.size());
    map.carrier_phi0 = traj.params.phi0;
    map.fringe_count = traj.params.fringe_count;
    map.delta = traj.params.delta;

    const std::size_t nx = map.x.size();
    parallel_for(map.t.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t it = lo; it < hi; ++it) {
            for (std::size_t ix = 0; ix < nx; ++ix) {
                const auto [r, l] = directional_split(traj, map.x[ix], map.t[it]);
                map.values[it * nx + ix] = std::norm(r + l);
            }
        }
    });
    return map;
}

} // namespace atomcav
