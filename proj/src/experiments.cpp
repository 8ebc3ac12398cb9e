#include "atomcav/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>

namespace atomcav {

namespace {

// Density row plus its characteristic frequencies for one parameter point.
void fill_row(const SystemParams& p, std::span<const double> omega_grid,
              std::vector<double>& row, std::vector<double>& peaks) {
    row.resize(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i)
        row[i] = std::norm(response_f0_at(Complex(omega_grid[i], 0.0), p));
    const int pts = std::max<int>(4001, static_cast<int>(omega_grid.size()));
    peaks = characteristic_frequencies(p, omega_grid.front(), omega_grid.back(), pts);
}

SweepResult run_sweep(const SystemParams& base, std::string axis_name,
                      std::span<const double> axis,
                      std::span<const double> omega_grid, int jobs,
                      const std::function<SystemParams(double)>& at) {
    SweepResult out;
    out.axis_name = std::move(axis_name);
    out.axis.assign(axis.begin(), axis.end());
    out.omega.assign(omega_grid.begin(), omega_grid.end());
    out.rows.resize(axis.size());
    out.peaks.resize(axis.size());
    out.base = base;
    std::exception_ptr first_error;
    std::mutex err_mutex;
    parallel_for(axis.size(), jobs, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            try {
                fill_row(at(out.axis[i]), omega_grid, out.rows[i], out.peaks[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    });
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

} // namespace

SweepResult sweep_eta_density(const SystemParams& base, std::span<const double> etas,
                              std::span<const double> omega_grid, int jobs) {
    return run_sweep(base, "eta", etas, omega_grid, jobs, [&base](double v) {
        SystemParams p = base;
        p.eta = v;
        return validate(p);
    });
}

SweepResult sweep_deltac(const SystemParams& base, std::span<const double> dcs,
                         std::span<const double> omega_grid, int jobs) {
    return run_sweep(base, "delta_c", dcs, omega_grid, jobs, [&base](double v) {
        SystemParams p = base;
        p.delta_c = v;
        return validate(make_placement(Placement::node, p));
    });
}

SweepResult sweep_delta(const SystemParams& base, std::span<const double> deltas,
                        std::span<const double> omega_grid, int jobs) {
    return run_sweep(base, "delta", deltas, omega_grid, jobs, [&base](double v) {
        SystemParams p = base;
        p.delta = v;
        return validate(p);
    });
}

double frequency_pulling(const SystemParams& p) {
    if (p.eta <= 0.0)
        throw Error(ErrorCode::ValidationError, "frequency pulling needs eta > 0");
    const double window = 2.0 * derive(p).fsr_full;
    const std::vector<double> freqs =
        characteristic_frequencies(p, -window, window, 8001);
    double best = freqs.front();
    for (double w : freqs)
        if (std::abs(w) < std::abs(best)) best = w;
    return best;
}

std::vector<double> extract_peaks(std::span<const double> omega,
                                  std::span<const double> density,
                                  double prominence_frac) {
    std::vector<double> x(omega.begin(), omega.end());
    std::vector<double> y(density.begin(), density.end());
    double max_finite = 0.0;
    for (double v : y)
        if (std::isfinite(v)) max_finite = std::max(max_finite, v);
    const double threshold = prominence_frac * max_finite;

    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (!(y[i] >= y[i - 1] && y[i] > y[i + 1])) continue;
        // prominence: drop to the higher of the two saddles toward higher ground
        double left_min = y[i];
        for (std::size_t j = i; j-- > 0;) {
            if (y[j] > y[i]) break;
            left_min = std::min(left_min, y[j]);
        }
        double right_min = y[i];
        for (std::size_t j = i + 1; j < y.size(); ++j) {
            if (y[j] > y[i]) break;
            right_min = std::min(right_min, y[j]);
        }
        const double prom = y[i] - std::max(left_min, right_min);
        const bool keep = std::isinf(y[i]) || prom >= threshold;
        if (keep) peaks.push_back(quadratic_peak_refine(x, y, i));
    }
    return peaks;
}

PhaseBeats extract_phase_beats(const AmplitudeTrajectory& traj) {
    constexpr double kNullAmp = 1e-6;
    PhaseBeats out;
    out.times = traj.times;
    out.phase.assign(traj.size(), std::numeric_limits<double>::quiet_NaN());

    bool any_valid = false;
    double prev = 0.0;
    bool have_prev = false;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (std::abs(traj.c0[i]) < kNullAmp) {
            have_prev = false;  // unwrapping restarts after a null
            continue;
        }
        double ph = std::arg(traj.c0[i]);
        if (have_prev) {
            const double two_pi = 2.0 * std::numbers::pi;
            double k = std::round((prev - ph) / two_pi);
            ph += k * two_pi;
        }
        out.phase[i] = ph;
        prev = ph;
        have_prev = true;
        any_valid = true;
    }
    if (!any_valid)
        throw Error(ErrorCode::PhaseUndefined, "|c0| < 1e-6 everywhere");

    // least-squares slope over the valid samples
    double st = 0, sp = 0, stt = 0, stp = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < out.phase.size(); ++i) {
        if (!std::isfinite(out.phase[i])) continue;
        st += out.times[i];
        sp += out.phase[i];
        stt += out.times[i] * out.times[i];
        stp += out.times[i] * out.phase[i];
        ++n;
    }
    const double denom = static_cast<double>(n) * stt - st * st;
    out.phase_slope = denom != 0.0 ? (static_cast<double>(n) * stp - st * sp) / denom : 0.0;
    out.beat_period = std::abs(out.phase_slope) > 1e-12
                          ? 2.0 * std::numbers::pi / std::abs(out.phase_slope)
                          : std::numeric_limits<double>::infinity();

    // fast oscillation of the excitation probability: median peak spacing
    std::vector<double> p0(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) p0[i] = std::norm(traj.c0[i]);
    out.peak_times = extract_peaks(out.times, p0, 0.05);
    if (out.peak_times.size() >= 2) {
        std::vector<double> gaps(out.peak_times.size() - 1);
        for (std::size_t i = 0; i + 1 < out.peak_times.size(); ++i)
            gaps[i] = out.peak_times[i + 1] - out.peak_times[i];
        auto mid = gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2);
        std::nth_element(gaps.begin(), mid, gaps.end());
        out.p0_peak_period = *mid;
    }
    return out;
}

} // namespace atomcav
