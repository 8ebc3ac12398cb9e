#include "atomcav/dde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "atomcav/history_buffer.hpp"

namespace atomcav {

namespace {

Complex interp(const std::vector<Complex>& a, double dt, double t) {
    if (t < 0.0 || a.empty()) return {0.0, 0.0};
    const double pos = t / dt;
    const auto i0 = static_cast<std::size_t>(pos);
    if (i0 + 1 >= a.size()) return a.back();
    const double frac = pos - static_cast<double>(i0);
    return a[i0] + frac * (a[i0 + 1] - a[i0]);
}

struct Rhs {
    Complex f0, flm, frm;
};

} // namespace

Complex AmplitudeTrajectory::interp_c0(double t) const { return interp(c0, dt, t); }
Complex AmplitudeTrajectory::interp_c_lm(double t) const { return interp(c_lm, dt, t); }
Complex AmplitudeTrajectory::interp_c_rm(double t) const { return interp(c_rm, dt, t); }

AmplitudeTrajectory integrate_collective(const SystemParams& params, double t_max,
                                         int steps_per_delay, Method method) {
    const SystemParams p = validate(params);
    if (t_max <= 0.0)
        throw Error(ErrorCode::ValidationError, "t_max must be positive");
    if (steps_per_delay < 1)
        throw Error(ErrorCode::ValidationError, "steps_per_delay must be >= 1");

    const double n = static_cast<double>(p.n_atoms);
    double dt;
    std::size_t lag1, lag2;
    if (p.eta > 0.0) {
        // Both lags are exact grid multiples; no history interpolation.
        dt = p.eta / steps_per_delay;
        lag1 = static_cast<std::size_t>(steps_per_delay);
        lag2 = 2 * lag1;
    } else {
        // Markovian limit: delays read the current step.
        dt = (0.001 / std::max(1.0, n)) * (2000.0 / steps_per_delay);
        lag1 = lag2 = 0;
    }
    if (dt * std::max(1.0, 0.5 * n) > 0.1)
        throw Error(ErrorCode::StepTooCoarse,
                    "dt*max(1, N/2) = " + std::to_string(dt * std::max(1.0, 0.5 * n)) +
                        " exceeds 0.1; raise steps_per_delay");

    const auto nsteps = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-12));

    const DerivedQuantities d = derive(p);
    const double sqrt_n = std::sqrt(n);
    const Complex e_iphim = std::polar(1.0, d.phi_m);
    const Complex e_iphi0 = std::polar(1.0, p.phi0);
    const Complex e_2iphim = std::polar(1.0, 2.0 * d.phi_m);

    AmplitudeTrajectory traj;
    traj.params = p;
    traj.dt = dt;
    traj.times.resize(nsteps + 1);
    traj.c0.resize(nsteps + 1);
    traj.c_lm.resize(nsteps + 1);
    traj.c_rm.resize(nsteps + 1);

    HistoryBuffer h0(lag2), hlm(lag2), hrm(lag2);
    Complex c0 = {1.0, 0.0}, clm = {0.0, 0.0}, crm = {0.0, 0.0};
    h0.push(c0);
    hlm.push(clm);
    hrm.push(crm);
    traj.times[0] = 0.0;
    traj.c0[0] = c0;
    traj.c_lm[0] = clm;
    traj.c_rm[0] = crm;

    const bool markovian = (lag1 == 0);

    // RHS of the three DDEs at phase time t_ph with local values y and the
    // delayed samples taken `back` steps behind the newest history entry.
    auto rhs = [&](double t_ph, Complex y0, Complex ylm, Complex yrm,
                   std::size_t back) -> Rhs {
        Complex d0_1, dlm_1, drm_1, dlm_2, drm_2;
        if (markovian) {
            d0_1 = y0;
            dlm_1 = ylm;
            drm_1 = yrm;
            dlm_2 = ylm;
            drm_2 = yrm;
        } else {
            d0_1 = h0.at_lag(lag1 - back);
            dlm_1 = hlm.at_lag(lag1 - back);
            drm_1 = hrm.at_lag(lag1 - back);
            dlm_2 = hlm.at_lag(lag2 - back);
            drm_2 = hrm.at_lag(lag2 - back);
        }
        const Complex e_pd = std::polar(1.0, p.delta * t_ph);   // e^{+i delta t}
        const Complex e_md = std::conj(e_pd);                   // e^{-i delta t}
        Rhs r;
        r.f0 = -0.5 * (y0 + sqrt_n * (dlm_1 + drm_1) * e_iphim * e_pd);
        const Complex src = sqrt_n * d0_1 * e_md * e_iphi0;
        r.flm = -0.5 * (src + n * ylm + n * drm_2 * e_2iphim);
        r.frm = -0.5 * (src + n * yrm + n * dlm_2 * e_2iphim);
        return r;
    };

    for (std::size_t k = 0; k < nsteps; ++k) {
        const double t = static_cast<double>(k) * dt;
        if (method == Method::euler) {
            const Rhs r = rhs(t, c0, clm, crm, 0);
            c0 += dt * r.f0;
            clm += dt * r.flm;
            crm += dt * r.frm;
        } else {
            // Heun with the e^{+-i delta t} phases frozen at the half step,
            // which keeps the non-autonomous terms second order.
            const double t_ph = t + 0.5 * dt;
            const Rhs r1 = rhs(t_ph, c0, clm, crm, 0);
            const Complex p0 = c0 + dt * r1.f0;
            const Complex plm = clm + dt * r1.flm;
            const Complex prm = crm + dt * r1.frm;
            const Rhs r2 = rhs(t_ph, p0, plm, prm, 1);
            c0 += 0.5 * dt * (r1.f0 + r2.f0);
            clm += 0.5 * dt * (r1.flm + r2.flm);
            crm += 0.5 * dt * (r1.frm + r2.frm);
        }
        if (!std::isfinite(c0.real()) || !std::isfinite(c0.imag()) ||
            !std::isfinite(clm.real()) || !std::isfinite(clm.imag()))
            throw Error(ErrorCode::NonFiniteAmplitude,
                        "amplitude overflow at t = " + std::to_string(t + dt));
        h0.push(c0);
        hlm.push(clm);
        hrm.push(crm);
        traj.times[k + 1] = static_cast<double>(k + 1) * dt;
        traj.c0[k + 1] = c0;
        traj.c_lm[k + 1] = clm;
        traj.c_rm[k + 1] = crm;
    }
    return traj;
}

Complex free_decay_reference(double t) {
    return {std::exp(-0.5 * t), 0.0};
}

double richardson_check(const SystemParams& params, double t_max,
                        int steps_per_delay, Method method) {
    const AmplitudeTrajectory coarse =
        integrate_collective(params, t_max, steps_per_delay, method);
    const AmplitudeTrajectory fine =
        integrate_collective(params, t_max, 2 * steps_per_delay, method);
    double err = 0.0;
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        const std::size_t j = 2 * k;
        if (j >= fine.size()) break;
        err = std::max(err, std::abs(std::abs(coarse.c0[k]) - std::abs(fine.c0[j])));
    }
    return err;
}

} // namespace atomcav
