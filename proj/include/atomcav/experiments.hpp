#ifndef ATOMCAV_EXPERIMENTS_HPP
#define ATOMCAV_EXPERIMENTS_HPP

#include <span>
#include <string>
#include <vector>

#include "atomcav/dde.hpp"
#include "atomcav/spectral.hpp"

namespace atomcav {

// Parameter sweeps of the spectral density plus the derived observables
// read off the paper's figure-class results.

struct SweepResult {
    std::string axis_name;                      // "eta", "delta_c" or "delta"
    std::vector<double> axis;
    std::vector<double> omega;
    std::vector<std::vector<double>> rows;      // density, one row per axis value
    std::vector<std::vector<double>> peaks;     // characteristic frequencies per row
    SystemParams base;
};

SweepResult sweep_eta_density(const SystemParams& base, std::span<const double> etas,
                              std::span<const double> omega_grid, int jobs = 1);

// phi0 cycles as pi + dc*eta: node -> antinode -> node over dc*eta in {0, pi/2, pi}.
SweepResult sweep_deltac(const SystemParams& base, std::span<const double> dcs,
                         std::span<const double> omega_grid, int jobs = 1);

SweepResult sweep_delta(const SystemParams& base, std::span<const double> deltas,
                        std::span<const double> omega_grid, int jobs = 1);

// Pulled emitter resonance: the characteristic frequency nearest omega = 0
// for a node-referenced placement phi0 = pi + delta_c*eta.
double frequency_pulling(const SystemParams& p);

// Local maxima of a density row with quadratic sub-grid refinement, kept
// when their prominence exceeds prominence_frac * row maximum.
std::vector<double> extract_peaks(std::span<const double> omega,
                                  std::span<const double> density,
                                  double prominence_frac = 1e-3);

// Amplitude-and-phase decomposition c0(t) = A(t) e^{i Phi_c(t)}.
//
// beat_period is the cycle period 2*pi/|slope| of the unwrapped dynamical
// phase (the zig-zag period tau_0' = 2*pi/|omega_0'|); p0_peak_period is the
// median spacing of prominent |c0|^2 maxima (the fast oscillation between
// the pulled resonance and its neighbors). Phase samples with |c0| < 1e-6
// are NaN; throws PhaseUndefined when no sample is valid.
struct PhaseBeats {
    std::vector<double> times;
    std::vector<double> phase;       // unwrapped, NaN over nulls
    double phase_slope = 0.0;        // least-squares d Phi_c/dt
    double beat_period = 0.0;        // 2*pi/|phase_slope|, inf when slope ~ 0
    double p0_peak_period = 0.0;     // median |c0|^2 peak spacing, 0 if < 2 peaks
    std::vector<double> peak_times;
};
PhaseBeats extract_phase_beats(const AmplitudeTrajectory& traj);

} // namespace atomcav

#endif
