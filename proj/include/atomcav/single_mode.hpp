#ifndef ATOMCAV_SINGLE_MODE_HPP
#define ATOMCAV_SINGLE_MODE_HPP

#include <complex>

#include "atomcav/numeric.hpp"

namespace atomcav {

// Closed forms for the single-mode regime (emitter at an antinode,
// d/v << 1/delta and N*gamma*d/v << 1), gamma = 1.

// Effective Rabi frequency sqrt(2N + delta^2) and complex rate
// Upsilon' = -i delta + 1/2.
double rabi_frequency(int n_atoms, double delta);
Complex upsilon_prime(double delta);

// Damped Rabi oscillation of the emitter:
//   c0(t) = e^{-Y' t/2} [ cos(W t/2) + ((-i delta - 1/2)/W) sin(W t/2) ]
Complex rabi_c0(double t, int n_atoms, double delta);

// Collective mirror amplitude. Note: relative to the printed form the
// propagation phase enters as e^{+i phi_M}; the printed e^{-i phi_M} flips
// the sign of c_LM relative to the delay equations (checked numerically
// against the integrator, which both placements' Laplace forms confirm).
Complex rabi_mirror(double t, int n_atoms, double delta, double phi_m);

// Hybridized eigenvalue pair +-sqrt(2N + delta^2) of the coupled
// emitter/array mode; equals the pole-pair separation in this regime.
struct AvoidedCrossing {
    double omega_plus;
    double omega_minus;
};
AvoidedCrossing avoided_crossing(int n_atoms, double delta);

// Quadratic-denominator Laplace data for the antinode:
//   Y    = -i delta + 1/2 + i N sin(delta eta) e^{-i delta eta}
//   zeta = (i N/2) sin(delta eta) e^{-i delta eta} - i delta/2 + (N/2) e^{-i delta eta}
//   s+- = ( -Y +- sqrt(Y^2 - 4 zeta) ) / 2
struct LaplaceRoots {
    Complex s_plus;
    Complex s_minus;
    Complex upsilon;
    Complex zeta;
};
LaplaceRoots laplace_roots(int n_atoms, double delta, double eta);

// Heaviside inversion of the quadratic form:
//   c0(t) = sum_{s = s+-} (i N sin(delta eta) e^{-i delta eta} - i delta + s)
//           / (2 s + Y) * e^{s t}
// Retains the O(eta) detuning factors that rabi_c0 drops.
Complex heaviside_c0(double t, int n_atoms, double delta, double eta);

} // namespace atomcav

#endif
