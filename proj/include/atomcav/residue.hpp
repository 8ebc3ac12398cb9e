#ifndef ATOMCAV_RESIDUE_HPP
#define ATOMCAV_RESIDUE_HPP

#include <span>
#include <vector>

#include "atomcav/dde.hpp"
#include "atomcav/spectral.hpp"

namespace atomcav {

// Pole-sum reconstruction of the emitter amplitude. Closing the inverse
// transform of F0 in the lower half plane gives, for t > 0,
//
//   c0(t) = -i sum_p e^{-i w_p t} / D0'(w_p)
//
// The -i prefactor is fixed by the t = 0 sum rule c0(0) = 1 (exact for the
// single-pole N = 0 case); the per-pole weights are the printed limits
// lim (w - w_p)/D0(w) = 1/D0'(w_p).
struct Reconstruction {
    std::vector<Complex> poles_used;   // central pole(s) plus P per side
    std::vector<double> times;
    std::vector<Complex> c0_approx;
    double max_error = 0.0;            // vs reference, when supplied
    double l2_error = 0.0;
    bool has_reference = false;
    std::vector<double> p0_exact;      // |c0_ref|^2, when supplied
    std::vector<double> abs_error;     // |c0_approx - c0_ref|, when supplied
};

// Selects any pole with |Re| < central_tol (always included) plus the
// per_side nearest poles on each side of omega = 0. Throws EmptyPoleSet.
Reconstruction reconstruct(const PoleSet& poles, std::span<const double> t_grid,
                           int per_side,
                           const AmplitudeTrajectory* reference = nullptr,
                           double central_tol = 1e-6);

// Long-time excitation probability |1/D0'(w_bs)|^2 of the real (bound-state)
// pole. Throws NoBoundState if no pole has |Im| <= 1e-8.
double plateau_from_pole(const PoleSet& poles, double imag_tol = 1e-8);

} // namespace atomcav

#endif
