#include "atomcav/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace atomcav {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex phase2(const SystemParams& p) { return std::polar(1.0, 2.0 * p.phi0); }

} // namespace

Complex q_inner(Complex w, const SystemParams& p) {
    const double n = static_cast<double>(p.n_atoms);
    return phase2(p) * n +
           std::exp(-2.0 * kI * w * p.eta) * (n - 2.0 * kI * w - 2.0 * kI * p.delta);
}

Complex d_full(Complex w, const SystemParams& p) {
    const double n = static_cast<double>(p.n_atoms);
    return (0.5 - kI * w) * q_inner(w, p) - n * phase2(p);
}

Complex d_full_derivative(Complex w, const SystemParams& p) {
    const double n = static_cast<double>(p.n_atoms);
    const Complex qp = std::exp(-2.0 * kI * w * p.eta) * (-2.0 * kI) *
                       (p.eta * (n - 2.0 * kI * w - 2.0 * kI * p.delta) + 1.0);
    return -kI * q_inner(w, p) + (0.5 - kI * w) * qp;
}

Complex denominator_d0(Complex w, const SystemParams& p, double q_tol) {
    const double n = static_cast<double>(p.n_atoms);
    const Complex q = q_inner(w, p);
    if (std::abs(q) < q_tol)
        throw Error(ErrorCode::InnerDenominatorZero,
                    "inner denominator vanishes; use the cleared form");
    return 0.5 - kI * w - n * phase2(p) / q;
}

ClearedForms cleared_forms(Complex w, const SystemParams& p) {
    return {q_inner(w, p), d_full(w, p)};
}

double abs_d0(Complex w, const SystemParams& p) {
    if (p.n_atoms == 0) return std::abs(0.5 - kI * w);  // fraction term is absent
    const double qa = std::abs(q_inner(w, p));
    const double da = std::abs(d_full(w, p));
    if (qa == 0.0) return std::numeric_limits<double>::infinity();
    return da / qa;
}

Complex d0_derivative(Complex w, const SystemParams& p) {
    if (p.n_atoms == 0) return -kI;
    const Complex q = q_inner(w, p);
    const Complex df = d_full(w, p);
    const double n = static_cast<double>(p.n_atoms);
    const Complex qp = std::exp(-2.0 * kI * w * p.eta) * (-2.0 * kI) *
                       (p.eta * (n - 2.0 * kI * w - 2.0 * kI * p.delta) + 1.0);
    const Complex dfp = -kI * q + (0.5 - kI * w) * qp;
    return (dfp * q - df * qp) / (q * q);
}

Complex response_f0_at(Complex w, const SystemParams& p) {
    const Complex denom_scale = 2.0 * std::numbers::pi * kI;
    if (p.n_atoms == 0) return 1.0 / (denom_scale * (0.5 - kI * w));
    return q_inner(w, p) / (denom_scale * d_full(w, p));
}

SpectralResponse response_f0(std::span<const double> omega_grid,
                             const SystemParams& p) {
    SpectralResponse r;
    r.params = p;
    r.omega.assign(omega_grid.begin(), omega_grid.end());
    r.f0.resize(r.omega.size());
    r.density.resize(r.omega.size());
    for (std::size_t i = 0; i < r.omega.size(); ++i) {
        r.f0[i] = response_f0_at(Complex(r.omega[i], 0.0), p);
        r.density[i] = std::norm(r.f0[i]);
    }
    return r;
}

double default_window(const SystemParams& p) {
    const double rabi = 3.0 * std::sqrt(2.0 * std::max(1, p.n_atoms));
    if (p.eta <= 0.0) return std::max(rabi, 20.0);
    return std::max(rabi, 4.0 * std::numbers::pi / p.eta);
}

std::vector<double> characteristic_frequencies(const SystemParams& p,
                                               double w_lo, double w_hi,
                                               int grid_points) {
    if (!(w_hi > w_lo) || grid_points < 3)
        throw Error(ErrorCode::ValidationError, "bad frequency window");
    const std::vector<double> grid = linspace(w_lo, w_hi, grid_points);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        vals[i] = abs_d0(Complex(grid[i], 0.0), p);

    auto f = [&p](double w) { return abs_d0(Complex(w, 0.0), p); };
    std::vector<double> minima;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (!std::isfinite(vals[i])) continue;
        if (vals[i] <= vals[i - 1] && vals[i] < vals[i + 1]) {
            const double w = golden_section_min(f, grid[i - 1], grid[i + 1], 1e-10);
            if (minima.empty() || std::abs(w - minima.back()) > 1e-8)
                minima.push_back(w);
        }
    }
    std::sort(minima.begin(), minima.end());
    if (minima.empty())
        throw Error(ErrorCode::NoMinimaFound, "no |D0| minima in the window");
    return minima;
}

namespace {

struct MullerResult {
    Complex root;
    int iterations;
    bool converged;
};

MullerResult muller_iterate(const SystemParams& p, Complex seed, int max_iter) {
    auto f = [&p](Complex w) { return d_full(w, p); };
    const double h = 1e-4 * (1.0 + std::abs(seed));
    Complex x0 = seed, x1 = seed + h, x2 = seed + h * kI;
    Complex f0 = f(x0), f1 = f(x1), f2 = f(x2);
    int it = 0;
    bool converged = false;
    for (; it < max_iter; ++it) {
        const Complex d01 = (f0 - f1) / (x0 - x1);
        const Complex d12 = (f1 - f2) / (x1 - x2);
        const Complex d02 = (f0 - f2) / (x0 - x2);
        const Complex w = d01 + d02 - d12;
        const Complex dd = (d01 - d12) / (x0 - x2);
        const Complex r = std::sqrt(w * w - 4.0 * f0 * dd);
        // pick the sign that maximizes the denominator
        const Complex den = (std::abs(w + r) >= std::abs(w - r)) ? w + r : w - r;
        if (den == Complex{0.0, 0.0}) break;
        const Complex xn = x0 - 2.0 * f0 / den;
        x2 = x1;
        f2 = f1;
        x1 = x0;
        f1 = f0;
        x0 = xn;
        f0 = f(x0);
        if (std::abs(x0 - x1) < 1e-14 * (1.0 + std::abs(x0))) {
            converged = true;
            break;
        }
        if (f0 == Complex{0.0, 0.0}) {
            converged = true;
            break;
        }
    }
    // Newton polish with the analytic derivative
    for (int k = 0; k < 3 && converged; ++k) {
        const Complex fp = d_full_derivative(x0, p);
        if (fp == Complex{0.0, 0.0}) break;
        const Complex step = f(x0) / fp;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        x0 -= step;
    }
    return {x0, it, converged};
}

} // namespace

PoleSet poles_muller(const SystemParams& p, std::span<const Complex> seeds,
                     const SpectralTolerances& tol, int max_iter) {
    PoleSet set;
    set.params = p;
    for (const Complex& seed : seeds) {
        const MullerResult m = muller_iterate(p, seed, max_iter);
        if (!m.converged) {
            set.failed_seeds.push_back(seed);
            continue;
        }
        const Complex q = q_inner(m.root, p);
        if (std::abs(q) < tol.q_tol) continue;  // pole-zero cancellation, spurious
        const double residual = abs_d0(m.root, p);
        if (!(residual <= tol.root_tol) || m.root.imag() > tol.pole_imag_tol) {
            set.failed_seeds.push_back(seed);
            continue;
        }
        const bool dup = std::any_of(set.poles.begin(), set.poles.end(),
                                     [&](const Pole& q0) {
                                         return std::abs(q0.omega - m.root) <= tol.dedup_tol;
                                     });
        if (dup) continue;
        Pole pole;
        pole.omega = m.root;
        pole.weight = 1.0 / d0_derivative(m.root, p);
        pole.iterations = m.iterations;
        pole.residual = residual;
        set.poles.push_back(pole);
    }
    std::sort(set.poles.begin(), set.poles.end(), [](const Pole& a, const Pole& b) {
        if (a.omega.real() != b.omega.real()) return a.omega.real() < b.omega.real();
        return a.omega.imag() < b.omega.imag();
    });
    return set;
}

PoleSet find_poles(const SystemParams& p, double w_lo, double w_hi,
                   int grid_points, const SpectralTolerances& tol) {
    const std::vector<double> freqs =
        characteristic_frequencies(p, w_lo, w_hi, grid_points);
    std::vector<Complex> seeds;
    seeds.reserve(freqs.size());
    for (double w : freqs) seeds.emplace_back(w, -0.1);
    return poles_muller(p, seeds, tol);
}

SplittingPrediction closed_form_splitting(const SystemParams& p, int order) {
    const double n = static_cast<double>(p.n_atoms);
    const double x = n * p.eta;
    double series = 1.0 / std::numbers::sqrt2;
    if (order >= 2) series -= x / (2.0 * std::numbers::sqrt2);
    if (order >= 3) series += 0.75 * x * x;
    SplittingPrediction s;
    s.omega_p = std::sqrt(n) * series;
    s.splitting_taylor = 2.0 * s.omega_p;
    s.splitting_resummed = std::sqrt(2.0 * n / (1.0 + 2.0 * n * p.eta));
    return s;
}

Complex taylor_denominator(Complex w, const SystemParams& p, Placement placement) {
    const double n = static_cast<double>(p.n_atoms);
    const double dl = p.delta;
    const double eta = p.eta;
    const Complex w2 = w * w, w3 = w2 * w, w4 = w2 * w2;
    // common O(eta) bracket: N d w + N w^2 + 2 N^2 w^2 - 4 N d w^3 - 4 N w^4
    const Complex bracket1 =
        n * dl * w + n * w2 + 2.0 * n * n * w2 - 4.0 * n * dl * w3 - 4.0 * n * w4;
    if (placement == Placement::antinode) {
        const Complex t0 = (dl + w) * (dl + w) +
                           (-n + 2.0 * w * (dl + w)) * (-n + 2.0 * w * (dl + w));
        const Complex t1 = -2.0 * eta * bracket1;
        const Complex t2 = eta * eta *
                           (-n * n * w2 + 8.0 * n * dl * w3 + 8.0 * n * w4 +
                            4.0 * n * n * w4);
        const Complex t3 = (4.0 / 3.0) * eta * eta * eta * w3 *
                           (n * dl + n * w + 2.0 * n * n * w - 4.0 * n * dl * w2 -
                            4.0 * n * w3);
        return t0 + t1 + t2 + t3;
    }
    // Node form as printed; its eta^0 coefficient 4*(d+w+2Nw)^2 exceeds the
    // exact |D_full|^2 by 3*(d+w+2Nw)^2 (see the taylor tests).
    const Complex t0 = 4.0 * w2 * (dl + w) * (dl + w) +
                       4.0 * (dl + w + 2.0 * n * w) * (dl + w + 2.0 * n * w);
    const Complex t1 = 2.0 * eta * bracket1;
    const Complex t2 = eta * eta * w2 *
                       (n * n - 8.0 * n * dl * w - 8.0 * n * w2 - 4.0 * n * w2);
    const Complex t3 = -(4.0 / 3.0) * eta * eta * eta * w3 *
                       (n * dl + n * w + 2.0 * n * n * w - 4.0 * n * dl * w2 -
                        4.0 * n * w4);
    return t0 + t1 + t2 + t3;
}

SaturationTable coupling_saturation_scan(std::span<const int> n_values,
                                         std::span<const double> eta_values) {
    SaturationTable table;
    table.n_values.assign(n_values.begin(), n_values.end());
    table.eta_values.assign(eta_values.begin(), eta_values.end());
    table.first_peak.resize(n_values.size() * eta_values.size());
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        for (std::size_t j = 0; j < eta_values.size(); ++j) {
            SystemParams p;
            p.n_atoms = n_values[i];
            p.eta = eta_values[j];
            p.delta = 0.0;
            p.delta_c = 0.0;
            p = make_placement(Placement::antinode, p);
            const double hi =
                std::max(8.0, 1.5 * std::sqrt(0.5 * std::max(1, p.n_atoms)));
            const std::vector<double> freqs =
                characteristic_frequencies(p, 1e-3, hi, 8001);
            table.first_peak[i * eta_values.size() + j] = freqs.front();
        }
    }
    return table;
}

} // namespace atomcav
