#ifndef ATOMCAV_MODEL_HPP
#define ATOMCAV_MODEL_HPP

#include "atomcav/errors.hpp"

namespace atomcav {

// Unit system: gamma = 1 and v = 1 throughout. Times are in 1/gamma,
// frequencies in gamma, positions in v/gamma, and the mirror distance d
// equals the dimensionless delay eta = gamma*d/v. All frequencies are in
// the rotating frame of the emitter (omega means omega - omega_0).

enum class Placement { node, antinode };

// Physical knobs of the two-mirror setup.
//
// phi0 is the one-way propagation phase omega_0*d/v taken modulo 2*pi as an
// independent knob: the physical omega_0/gamma is huge, so any phase is
// reachable at any eta. fringe_count restores an absolute carrier for the
// intensity map only, via omega_0*d/v = phi0 + 2*pi*fringe_count.
struct SystemParams {
    int n_atoms = 100;       // N, atoms per mirror array
    double eta = 1.0;        // gamma*d/v
    double delta = 0.0;      // omega_0 - omega_M, units of gamma
    double phi0 = 3.14159265358979323846;  // stored in [0, 2*pi)
    double delta_c = 0.0;    // detuning from the nearest node-class cavity mode
    int fringe_count = 20;   // K in omega_0*d/v = phi0 + 2*pi*K
};

struct DerivedQuantities {
    double phi_m;            // phi_M = phi0 - delta*eta
    double fsr_full;         // pi/(2*eta), full-cavity free spectral range
    double fsr_half;         // pi/eta, half-cavity free spectral range
    double collective_rate;  // N*gamma
    double markov_index;     // N*eta
};

// Returns params with phi0 wrapped to [0, 2*pi), or throws.
SystemParams validate(SystemParams p);

DerivedQuantities derive(const SystemParams& p);

// Sets phi0 = pi (node) or pi/2 (antinode) plus delta_c*eta from p.delta_c.
SystemParams make_placement(Placement kind, SystemParams p);

double wrap_phase(double phi);  // into [0, 2*pi)

} // namespace atomcav

#endif
