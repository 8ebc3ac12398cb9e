// Acceptance suite: one quantitative criterion per line, run end to end
// against the library. Exits with the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "atomcav/dde.hpp"
#include "atomcav/experiments.hpp"
#include "atomcav/fullarray.hpp"
#include "atomcav/intensity.hpp"
#include "atomcav/model.hpp"
#include "atomcav/residue.hpp"
#include "atomcav/single_mode.hpp"
#include "atomcav/spectral.hpp"

using namespace atomcav;
using std::numbers::pi;

namespace {

int failures = 0;

SystemParams make(int n, double eta, double delta, Placement where, double dc = 0.0) {
    SystemParams p;
    p.n_atoms = n;
    p.eta = eta;
    p.delta = delta;
    p.delta_c = dc;
    return validate(make_placement(where, p));
}

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

void run(int id, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        std::tie(pass, detail) = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2fs)", secs);
    report(id, name, pass, detail + buf);
}

std::string fmt(const char* spec, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, spec, a, b);
    return buf;
}

} // namespace

int main() {
    // 1. Vacuum Rabi splitting in the single-mode regime
    run(1, "vacuum Rabi pole pair", [] {
        const auto p = make(100, 1e-5, 0.0, Placement::antinode);
        const PoleSet set = find_poles(p, -15.0, 15.0, 8001);
        if (set.poles.size() != 2) return std::make_pair(false, std::string("pole count"));
        const double expected = std::sqrt(399.0) / (2.0 * std::numbers::sqrt2);
        double worst = 0.0;
        for (const Pole& pole : set.poles)
            worst = std::max(worst,
                             std::abs(std::abs(pole.omega.real()) - expected) / expected);
        return std::make_pair(worst <= 0.02,
                              fmt("|Re w| vs %.4f, rel err %.4f", expected, worst));
    });

    // 2. Delay-corrected splitting against the quoted resummed formula
    run(2, "delay-corrected splitting", [] {
        const auto p = make(100, 1e-3, 0.0, Placement::antinode);
        const PoleSet set = find_poles(p, -25.0, 25.0, 16001);
        const double split =
            set.poles.back().omega.real() - set.poles.front().omega.real();
        const double expected = closed_form_splitting(p).splitting_resummed;  // 12.910
        const double rel = std::abs(split - expected) / expected;
        return std::make_pair(rel <= 0.03,
                              fmt("muller %.4f vs resummed %.4f", split, expected) +
                                  fmt(", rel err %.4f (tol %.2f)", rel, 0.03));
    });

    // 3. Exact bound-state pole at the node
    run(3, "exact bound-state pole", [] {
        bool ok = true;
        std::string detail;
        for (double eta : {0.37, 1.0, 1.9}) {
            const auto p = make(100, eta, 0.0, Placement::node);
            const double d0_at_zero = std::abs(d_full(Complex(0.0, 0.0), p));
            const Complex seeds[] = {Complex(0.01, -0.05)};
            const PoleSet set = poles_muller(p, seeds);
            const double dist =
                set.poles.empty() ? 1.0 : std::abs(set.poles.front().omega);
            ok = ok && d0_at_zero <= 1e-12 && dist <= 1e-10;
            detail = fmt("|D_full(0)| = %.2e, |w_muller| = %.2e", d0_at_zero, dist);
        }
        return std::make_pair(ok, detail);
    });

    // 4. Exact spectral null at the antinode
    run(4, "exact spectral null", [] {
        const auto p = make(100, 1.0, 0.0, Placement::antinode);
        const double f0 = std::abs(response_f0_at(Complex(0.0, 0.0), p));
        return std::make_pair(f0 <= 1e-12, fmt("|F0(0)| = %.2e (tol %.0e)", f0, 1e-12));
    });

    // 5. Full-array oracle equivalence across the small-N grid
    run(5, "oracle equivalence", [] {
        double worst = 0.0;
        for (int n : {1, 2, 3})
            for (double eta : {0.1, 0.5, 1.0})
                for (double delta : {0.0, 3.0})
                    for (Placement where : {Placement::node, Placement::antinode}) {
                        const auto p = make(n, eta, delta, where);
                        worst = std::max(worst, oracle_deviation(p, 4.0, 200));
                    }
        return std::make_pair(worst <= 1e-8, fmt("max deviation %.2e (tol %.0e)",
                                                 worst, 1e-8));
    });

    // 6. Free decay before the first round trip
    run(6, "pre-echo free decay", [] {
        const auto p = make(100, 1.0, 0.0, Placement::antinode);
        const AmplitudeTrajectory traj = integrate_collective(p, 1.0, 4000);
        double worst = 0.0;
        for (std::size_t k = 0; k < traj.size() && traj.times[k] < p.eta; ++k)
            worst = std::max(worst, std::abs(std::abs(traj.c0[k]) -
                                             std::exp(-0.5 * traj.times[k])));
        return std::make_pair(worst <= 1e-4, fmt("max ||c0|-e^{-t/2}| = %.2e (tol %.0e)",
                                                 worst, 1e-4));
    });

    // 7. Residue reconstruction with three poles per side
    run(7, "residue reconstruction", [] {
        bool ok = true;
        std::string detail;
        for (Placement where : {Placement::antinode, Placement::node}) {
            const auto p = make(100, 1.0, 0.0, where);
            const PoleSet set = find_poles(p, -45.0, 45.0, 30001);
            const AmplitudeTrajectory traj = integrate_collective(p, 10.0, 2000);
            const Reconstruction rec = reconstruct(set, traj.times, 3, &traj);
            ok = ok && rec.max_error <= 0.05;
            detail += fmt("%.0f poles err %.4f; ",
                          static_cast<double>(rec.poles_used.size()), rec.max_error);
        }
        return std::make_pair(ok, detail + "(tol 0.05)");
    });

    // 8. Single-mode analytic limit against the printed closed form
    run(8, "single-mode analytic limit", [] {
        bool ok = true;
        std::string detail;
        for (double delta : {0.0, 15.0}) {
            const auto p = make(100, 1e-4, delta, Placement::antinode);
            const AmplitudeTrajectory traj = integrate_collective(p, 1.0, 2);
            double worst = 0.0;
            for (std::size_t k = 0; k < traj.size(); ++k)
                worst = std::max(worst, std::abs(traj.c0[k] -
                                                 rabi_c0(traj.times[k], 100, delta)));
            ok = ok && worst <= 1e-2;
            detail += fmt("delta=%.0f err %.4f; ", delta, worst);
        }
        return std::make_pair(ok, detail + "(tol 0.01)");
    });

    // 9. Avoided crossing: dominant pole pair vs the hybridization gap
    run(9, "avoided crossing", [] {
        bool ok = true;
        std::string detail;
        for (double delta : {0.0, 5.0, 15.0}) {
            const auto p = make(100, 1e-5, delta, Placement::antinode);
            const PoleSet set = find_poles(p, -40.0, 40.0, 20001);
            if (set.poles.size() < 2) return std::make_pair(false, std::string("poles"));
            std::vector<const Pole*> by_w;
            for (const Pole& pole : set.poles) by_w.push_back(&pole);
            std::sort(by_w.begin(), by_w.end(), [](const Pole* a, const Pole* b) {
                return std::abs(a->weight) > std::abs(b->weight);
            });
            const double sep = std::abs(by_w[0]->omega.real() - by_w[1]->omega.real());
            const double gap = rabi_frequency(100, delta);
            ok = ok && std::abs(sep - gap) / gap <= 0.02;
            detail += fmt("d=%.0f sep/gap %.4f; ", delta, sep / gap);
        }
        return std::make_pair(ok, detail + "(tol 2%)");
    });

    // 10. Multimode peak spacing at the half-cavity FSR
    run(10, "multimode peak spacing", [] {
        const auto p = make(100, 1.0, 0.0, Placement::antinode);
        const std::vector<double> freqs =
            characteristic_frequencies(p, 0.01, 42.0, 24001);
        if (freqs.size() < 6) return std::make_pair(false, std::string("too few peaks"));
        double mean = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 2; i < freqs.size(); ++i) {
            mean += freqs[i] - freqs[i - 1];
            ++count;
        }
        mean /= static_cast<double>(count);
        const double rel = std::abs(mean - pi) / pi;
        return std::make_pair(rel <= 0.02,
                              fmt("mean spacing %.4f vs pi/eta %.4f", mean, pi) +
                                  fmt(", rel %.4f (tol %.2f)", rel, 0.02));
    });

    // 11. sqrt(N) growth and its saturation under delay
    run(11, "coupling saturation", [] {
        const int ns[] = {25, 100, 400};
        const double etas[] = {1e-5, 1.0};
        const SaturationTable t = coupling_saturation_scan(ns, etas);
        const double r1 = t.at(1, 0) / t.at(0, 0);
        const double r2 = t.at(2, 0) / t.at(1, 0);
        const double r_delay = t.at(2, 1) / t.at(1, 1);
        const bool ok = std::abs(r1 - 2.0) <= 0.1 && std::abs(r2 - 2.0) <= 0.1 &&
                        r_delay < 1.4;
        return std::make_pair(ok, fmt("sqrtN ratios %.3f/%.3f, ", r1, r2) +
                                      fmt("saturated ratio %.3f (< %.1f)", r_delay, 1.4));
    });

    // 12. Beats under a cavity detuning, flat phase without one
    run(12, "beats under frequency pulling", [] {
        const auto p = make(100, 1.0, 0.0, Placement::node, 0.25);
        const double pulled = frequency_pulling(p);
        const AmplitudeTrajectory traj = integrate_collective(p, 400.0, 400);
        const PhaseBeats beats = extract_phase_beats(traj);
        const double expected = 2.0 * pi / std::abs(pulled);
        const double rel = std::abs(beats.beat_period - expected) / expected;

        const auto p0 = make(100, 1.0, 0.0, Placement::node, 0.0);
        const AmplitudeTrajectory traj0 = integrate_collective(p0, 50.0, 400);
        const PhaseBeats flat = extract_phase_beats(traj0);
        double lo = 1e300, hi = -1e300;
        for (double ph : flat.phase) {
            if (!std::isfinite(ph)) continue;
            lo = std::min(lo, ph);
            hi = std::max(hi, ph);
        }
        const bool ok = rel <= 0.05 && (hi - lo) < 1e-6;
        return std::make_pair(ok, fmt("period %.2f vs 2pi/|w0'| %.2f", beats.beat_period,
                                      expected) +
                                      fmt(", rel %.4f; phase range %.1e", rel, hi - lo));
    });

    // 13. Intensity causality and mirror symmetry on a 1000x1000 map
    run(13, "intensity causality and symmetry", [] {
        const auto p = make(100, 1.0, 0.0, Placement::antinode);
        const AmplitudeTrajectory traj = integrate_collective(p, 14.0, 2000);
        const std::vector<double> xg = linspace(-4.0, 4.0, 1000);
        const std::vector<double> tg = linspace(0.0, 8.0, 1000);
        const IntensityMap map = intensity_map(traj, xg, tg, 4);
        double worst_sym = 0.0;
        bool causal = true, zero_start = true;
        for (std::size_t ix = 0; ix < xg.size(); ++ix)
            zero_start = zero_start && map.at(0, ix) == 0.0;
        for (std::size_t it = 0; it < tg.size(); ++it) {
            for (std::size_t ix = 0; ix < xg.size(); ++ix) {
                if (std::abs(xg[ix]) > tg[it] + p.eta + 1e-12 && map.at(it, ix) != 0.0)
                    causal = false;
                worst_sym = std::max(worst_sym,
                                     std::abs(map.at(it, ix) -
                                              map.at(it, xg.size() - 1 - ix)));
            }
        }
        const bool ok = zero_start && causal && worst_sym <= 1e-10;
        return std::make_pair(ok, fmt("sym err %.1e (tol %.0e)", worst_sym, 1e-10) +
                                      (causal ? ", causal" : ", CONE VIOLATION") +
                                      (zero_start ? ", I(x,0)=0" : ", I(x,0)!=0"));
    });

    std::printf("%d of 13 criteria passed\n", 13 - failures);
    return failures;
}
