#include "atomcav/model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace atomcav {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_phase(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    // fmod can land exactly on 2*pi after the correction for tiny negatives
    if (w >= kTwoPi) w = 0.0;
    return w;
}

SystemParams validate(SystemParams p) {
    if (p.n_atoms < 0)
        throw Error(ErrorCode::NonPositiveN,
                    "n_atoms must be >= 0, got " + std::to_string(p.n_atoms));
    if (p.eta < 0.0)
        throw Error(ErrorCode::NegativeEta,
                    "eta must be >= 0, got " + std::to_string(p.eta));
    if (p.fringe_count < 0)
        throw Error(ErrorCode::ValidationError, "fringe_count must be >= 0");
    for (double v : {p.eta, p.delta, p.phi0, p.delta_c}) {
        if (!std::isfinite(v))
            throw Error(ErrorCode::NonFiniteField, "non-finite parameter field");
    }
    p.phi0 = wrap_phase(p.phi0);
    return p;
}

DerivedQuantities derive(const SystemParams& p) {
    DerivedQuantities d;
    d.phi_m = p.phi0 - p.delta * p.eta;
    if (p.eta > 0.0) {
        d.fsr_full = std::numbers::pi / (2.0 * p.eta);
        d.fsr_half = std::numbers::pi / p.eta;
    } else {
        d.fsr_full = std::numeric_limits<double>::infinity();
        d.fsr_half = std::numeric_limits<double>::infinity();
    }
    d.collective_rate = static_cast<double>(p.n_atoms);
    d.markov_index = static_cast<double>(p.n_atoms) * p.eta;
    return d;
}

SystemParams make_placement(Placement kind, SystemParams p) {
    const double base = (kind == Placement::node) ? std::numbers::pi
                                                  : 0.5 * std::numbers::pi;
    p.phi0 = base + p.delta_c * p.eta;
    return p;
}

} // namespace atomcav
