#include "atomcav/fullarray.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace atomcav {

namespace {

// Lattice sign of site m (1-based, innermost first): the e^{(j+-1) i pi}
// factors of the collective sums reduce to (-1)^{m-1}.
double lattice_sign(int site) { return (site % 2 == 1) ? 1.0 : -1.0; }

} // namespace

FullArrayTrajectory integrate_fullarray(const SystemParams& params, double t_max,
                                        int steps_per_delay, int max_atoms,
                                        int carrier_fringes, Method method) {
    const SystemParams p = validate(params);
    if (p.n_atoms > max_atoms)
        throw Error(ErrorCode::OracleTooLarge,
                    "full-array oracle capped at N = " + std::to_string(max_atoms));
    if (t_max <= 0.0 || steps_per_delay < 1)
        throw Error(ErrorCode::ValidationError, "bad t_max or steps_per_delay");

    const int n = p.n_atoms;
    const double nd = static_cast<double>(n);
    double dt;
    std::size_t lag1, lag2;
    if (p.eta > 0.0) {
        dt = p.eta / steps_per_delay;
        lag1 = static_cast<std::size_t>(steps_per_delay);
        lag2 = 2 * lag1;
    } else {
        dt = (0.001 / std::max(1.0, nd)) * (2000.0 / steps_per_delay);
        lag1 = lag2 = 0;
    }
    if (dt * std::max(1.0, 0.5 * nd) > 0.1)
        throw Error(ErrorCode::StepTooCoarse, "dt too coarse for N");

    const std::size_t atoms = static_cast<std::size_t>(2 * n + 1);

    // Positions on the lambda_0/2 lattice; the carrier only has to be deep
    // enough that every pairwise distance rounds onto {0, eta, 2 eta}.
    const int k_carrier = (carrier_fringes > 0) ? carrier_fringes : 4 * n + 8;
    const double lambda_half =
        std::numbers::pi * p.eta / (p.phi0 + 2.0 * std::numbers::pi * k_carrier);

    FullArrayTrajectory full;
    full.params = p;
    full.dt = dt;
    full.positions.resize(atoms);
    full.positions[0] = 0.0;
    for (int m = 1; m <= n; ++m) {
        full.positions[static_cast<std::size_t>(m)] = -(p.eta + (m - 1) * lambda_half);
        full.positions[static_cast<std::size_t>(n + m)] = p.eta + (m - 1) * lambda_half;
    }

    // Assert the delay rounding instead of applying it silently.
    auto delay_class = [&](std::size_t a, std::size_t b) -> double {
        if (a == b) return 0.0;
        const bool a_mirror = a != 0, b_mirror = b != 0;
        if (!a_mirror || !b_mirror) return p.eta;
        const bool same_side = (a <= static_cast<std::size_t>(n)) ==
                               (b <= static_cast<std::size_t>(n));
        return same_side ? 0.0 : 2.0 * p.eta;
    };
    for (std::size_t a = 0; a < atoms; ++a) {
        for (std::size_t b = a + 1; b < atoms; ++b) {
            const double dist = std::abs(full.positions[a] - full.positions[b]);
            const double cls = delay_class(a, b);
            double best = 0.0, best_err = std::abs(dist - 0.0);
            for (double cand : {p.eta, 2.0 * p.eta}) {
                if (std::abs(dist - cand) < best_err) {
                    best = cand;
                    best_err = std::abs(dist - cand);
                }
            }
            if (best != cls)
                throw Error(ErrorCode::ValidationError,
                            "atom pair distance does not round to its delay class;"
                            " carrier too shallow");
        }
    }

    const auto nsteps = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-12));
    full.times.resize(nsteps + 1);
    full.amplitudes.assign(atoms, std::vector<Complex>(nsteps + 1, Complex{0.0, 0.0}));
    full.amplitudes[0][0] = {1.0, 0.0};

    const DerivedQuantities dq = derive(p);
    const Complex e_iphim = std::polar(1.0, dq.phi_m);
    const Complex e_iphi0 = std::polar(1.0, p.phi0);
    const Complex e_2iphim = std::polar(1.0, 2.0 * dq.phi_m);

    std::vector<double> sign(atoms, 1.0);
    for (int m = 1; m <= n; ++m) {
        sign[static_cast<std::size_t>(m)] = lattice_sign(m);
        sign[static_cast<std::size_t>(n + m)] = lattice_sign(m);
    }
    auto site_of = [n](std::size_t a) {
        return (a <= static_cast<std::size_t>(n)) ? static_cast<int>(a)
                                                  : static_cast<int>(a) - n;
    };
    auto is_left = [n](std::size_t a) { return a >= 1 && a <= static_cast<std::size_t>(n); };

    const bool markovian = (lag1 == 0);
    std::vector<Complex> y(atoms), f1(atoms), f2(atoms), pred(atoms);
    for (std::size_t a = 0; a < atoms; ++a) y[a] = full.amplitudes[a][0];

    // Delayed read of atom a at grid index idx (0 before t = 0); in the
    // Markovian limit the stage values are used instead.
    auto delayed = [&](const std::vector<Complex>& stage, std::size_t a,
                       std::ptrdiff_t idx) -> Complex {
        if (markovian) return stage[a];
        if (idx < 0) return {0.0, 0.0};
        return full.amplitudes[a][static_cast<std::size_t>(idx)];
    };

    auto rhs = [&](const std::vector<Complex>& stage, double t_ph,
                   std::ptrdiff_t base_idx, std::vector<Complex>& out) {
        const Complex e_pd = std::polar(1.0, p.delta * t_ph);
        const Complex e_md = std::conj(e_pd);
        const std::ptrdiff_t i1 = base_idx - static_cast<std::ptrdiff_t>(lag1);
        const std::ptrdiff_t i2 = base_idx - static_cast<std::ptrdiff_t>(lag2);
        // emitter driven by every mirror atom with delay eta
        Complex mirror_sum{0.0, 0.0};
        for (std::size_t a = 1; a < atoms; ++a)
            mirror_sum += sign[a] * delayed(stage, a, i1);
        out[0] = -0.5 * (stage[0] + e_iphim * e_pd * mirror_sum);
        const Complex c0_del = delayed(stage, 0, i1);
        for (std::size_t a = 1; a < atoms; ++a) {
            Complex acc = stage[a];
            // instantaneous same-array exchange with the alternating phase
            for (std::size_t b = 1; b < atoms; ++b) {
                if (b == a || is_left(b) != is_left(a)) continue;
                const int dsite = std::abs(site_of(a) - site_of(b));
                acc += ((dsite % 2 == 0) ? 1.0 : -1.0) * stage[b];
            }
            acc += sign[a] * e_iphi0 * e_md * c0_del;
            Complex cross{0.0, 0.0};
            for (std::size_t b = 1; b < atoms; ++b) {
                if (is_left(b) == is_left(a)) continue;
                cross += sign[b] * delayed(stage, b, i2);
            }
            acc += sign[a] * e_2iphim * cross;
            out[a] = -0.5 * acc;
        }
    };

    for (std::size_t k = 0; k < nsteps; ++k) {
        const double t = static_cast<double>(k) * dt;
        if (method == Method::euler) {
            rhs(y, t, static_cast<std::ptrdiff_t>(k), f1);
            for (std::size_t a = 0; a < atoms; ++a) y[a] += dt * f1[a];
        } else {
            const double t_ph = t + 0.5 * dt;
            rhs(y, t_ph, static_cast<std::ptrdiff_t>(k), f1);
            for (std::size_t a = 0; a < atoms; ++a) pred[a] = y[a] + dt * f1[a];
            rhs(pred, t_ph, static_cast<std::ptrdiff_t>(k) + 1, f2);
            for (std::size_t a = 0; a < atoms; ++a)
                y[a] += 0.5 * dt * (f1[a] + f2[a]);
        }
        for (std::size_t a = 0; a < atoms; ++a) {
            if (!std::isfinite(y[a].real()) || !std::isfinite(y[a].imag()))
                throw Error(ErrorCode::NonFiniteAmplitude, "oracle amplitude overflow");
            full.amplitudes[a][k + 1] = y[a];
        }
        full.times[k + 1] = static_cast<double>(k + 1) * dt;
    }
    return full;
}

ProjectedSeries collective_project(const FullArrayTrajectory& full) {
    const int n = full.params.n_atoms;
    const std::size_t steps = full.times.size();
    ProjectedSeries proj;
    proj.c_lm.assign(steps, Complex{0.0, 0.0});
    proj.c_rm.assign(steps, Complex{0.0, 0.0});
    if (n == 0) return proj;
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int m = 1; m <= n; ++m) {
        const double s = lattice_sign(m);
        const auto& left = full.amplitudes[static_cast<std::size_t>(m)];
        const auto& right = full.amplitudes[static_cast<std::size_t>(n + m)];
        for (std::size_t k = 0; k < steps; ++k) {
            proj.c_lm[k] += s * norm * left[k];
            proj.c_rm[k] += s * norm * right[k];
        }
    }
    return proj;
}

double oracle_deviation(const SystemParams& params, double t_max,
                        int steps_per_delay, Method method) {
    const FullArrayTrajectory full =
        integrate_fullarray(params, t_max, steps_per_delay, 8, 0, method);
    const ProjectedSeries proj = collective_project(full);
    const AmplitudeTrajectory coll =
        integrate_collective(params, t_max, steps_per_delay, method);
    double dev = 0.0;
    const std::size_t steps = std::min(coll.size(), full.times.size());
    for (std::size_t k = 0; k < steps; ++k) {
        dev = std::max(dev, std::abs(full.amplitudes[0][k] - coll.c0[k]));
        dev = std::max(dev, std::abs(proj.c_lm[k] - coll.c_lm[k]));
        dev = std::max(dev, std::abs(proj.c_rm[k] - coll.c_rm[k]));
    }
    return dev;
}

} // namespace atomcav
