#ifndef ATOMCAV_SPECTRAL_HPP
#define ATOMCAV_SPECTRAL_HPP

#include <complex>
#include <span>
#include <vector>

#include "atomcav/model.hpp"
#include "atomcav/numeric.hpp"

namespace atomcav {

// Frequency response of the emitter, rotating frame, gamma = 1:
//
//   D0(w) = 1/2 - i w - N e^{2 i phi0} / Q(w)
//   Q(w)  = e^{2 i phi0} N + e^{-2 i w eta} (N - 2 i w - 2 i delta)
//   F0(w) = (1/(2 pi i)) / D0(w) = Q(w) / (2 pi i D_full(w))
//
// with the cleared form D_full = (1/2 - i w) Q - N e^{2 i phi0}. All pole
// work runs on D_full, which stays regular where Q vanishes.

struct SpectralTolerances {
    double root_tol = 1e-10;       // |D0| at an accepted pole
    double dedup_tol = 1e-6;       // min pairwise pole distance
    double q_tol = 1e-9;           // |Q| below which the fraction is singular
    double pole_imag_tol = 1e-8;   // max allowed Im(pole): no growing modes
};

struct SpectralResponse {
    SystemParams params;
    std::vector<double> omega;     // strictly increasing, rotating frame
    std::vector<Complex> f0;
    std::vector<double> density;   // |F0|^2
};

struct Pole {
    Complex omega;
    Complex weight;       // 1/D0'(omega), from the analytic quotient derivative
    int iterations = 0;
    double residual = 0.0;  // |D0| at the accepted root
};

struct PoleSet {
    SystemParams params;
    std::vector<Pole> poles;          // deduplicated, sorted by Re
    std::vector<Complex> failed_seeds;  // seeds that did not converge
};

Complex q_inner(Complex omega, const SystemParams& p);
Complex d_full(Complex omega, const SystemParams& p);
Complex d_full_derivative(Complex omega, const SystemParams& p);

// D0 exactly as printed; throws InnerDenominatorZero when |Q| < q_tol.
Complex denominator_d0(Complex omega, const SystemParams& p,
                       double q_tol = SpectralTolerances{}.q_tol);

struct ClearedForms {
    Complex q;
    Complex d_full;
};
ClearedForms cleared_forms(Complex omega, const SystemParams& p);

// |D0| via the cleared quotient; +inf where Q vanishes (D0 has a pole there).
double abs_d0(Complex omega, const SystemParams& p);

// d D0/d omega of the cleared quotient; at a root of D_full this reduces to
// D_full'/Q. Finite differences are ill-conditioned there, hence analytic.
Complex d0_derivative(Complex omega, const SystemParams& p);

Complex response_f0_at(Complex omega, const SystemParams& p);
SpectralResponse response_f0(std::span<const double> omega_grid,
                             const SystemParams& p);

// Default frequency window covering the Rabi doublet and several FSRs.
double default_window(const SystemParams& p);

// Local minima of |D0| on the real line, golden-section refined to 1e-10,
// sorted ascending. Throws NoMinimaFound when the window has none.
std::vector<double> characteristic_frequencies(const SystemParams& p,
                                               double w_lo, double w_hi,
                                               int grid_points = 16001);

// Muller iteration on D_full from the given seeds. Converged roots are
// screened against pole-zero cancellation (|Q| < q_tol), deduplicated, and
// checked for |D0| <= root_tol and Im <= pole_imag_tol. Failed seeds are
// recorded, not fatal.
PoleSet poles_muller(const SystemParams& p, std::span<const Complex> seeds,
                     const SpectralTolerances& tol = {}, int max_iter = 200);

// characteristic_frequencies -> seeds shifted by -0.1i -> poles_muller.
PoleSet find_poles(const SystemParams& p, double w_lo, double w_hi,
                   int grid_points = 16001, const SpectralTolerances& tol = {});

// Small-eta characteristic frequency at the antinode with delta = 0:
//   omega_p = +-sqrt(N) [ 1/sqrt(2) - N eta/(2 sqrt(2)) + (3/4)(N eta)^2 ]
// truncated at `order` in (N eta), plus the resummed doublet splitting
// sqrt(2N/(1+2N eta)).
struct SplittingPrediction {
    double omega_p;             // positive branch of the truncated series
    double splitting_taylor;    // 2*omega_p
    double splitting_resummed;  // sqrt(2N/(1+2N eta))
};
SplittingPrediction closed_form_splitting(const SystemParams& p, int order = 3);

// The printed cubic-in-eta expansions of |D_full|^2 about eta = 0 for the
// two placements. Small-eta validation only; the node variant carries a
// known misprint pinned by the tests.
Complex taylor_denominator(Complex omega, const SystemParams& p, Placement placement);

struct SaturationTable {
    std::vector<int> n_values;
    std::vector<double> eta_values;
    std::vector<double> first_peak;  // |omega_p| of first peak right of 0, row-major in n
    double at(std::size_t i_n, std::size_t i_eta) const {
        return first_peak[i_n * eta_values.size() + i_eta];
    }
};

// First characteristic frequency right of omega = 0 per (N, eta), for the
// antinode with delta = 0.
SaturationTable coupling_saturation_scan(std::span<const int> n_values,
                                         std::span<const double> eta_values);

} // namespace atomcav

#endif
