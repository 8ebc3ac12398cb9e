#include "atomcav/single_mode.hpp"

#include <cmath>

namespace atomcav {

namespace {
constexpr Complex kI{0.0, 1.0};
}

double rabi_frequency(int n_atoms, double delta) {
    return std::sqrt(2.0 * n_atoms + delta * delta);
}

Complex upsilon_prime(double delta) { return -kI * delta + 0.5; }

Complex rabi_c0(double t, int n_atoms, double delta) {
    const double om = rabi_frequency(n_atoms, delta);
    const Complex ups = upsilon_prime(delta);
    const Complex envelope = std::exp(-0.5 * ups * t);
    return envelope *
           (std::cos(0.5 * om * t) +
            ((-kI * delta - 0.5) / om) * std::sin(0.5 * om * t));
}

Complex rabi_mirror(double t, int n_atoms, double delta, double phi_m) {
    const double om = rabi_frequency(n_atoms, delta);
    const Complex ups = upsilon_prime(delta);
    const Complex bracket =
        -(kI * delta + 0.5) * (kI * delta + 0.5) / (2.0 * om) - 0.5 * om;
    return bracket * std::exp(-0.5 * ups * t) * std::exp(-kI * delta * t) *
           std::polar(1.0, phi_m) / std::sqrt(static_cast<double>(n_atoms)) *
           std::sin(0.5 * om * t);
}

AvoidedCrossing avoided_crossing(int n_atoms, double delta) {
    const double om = rabi_frequency(n_atoms, delta);
    return {om, -om};
}

LaplaceRoots laplace_roots(int n_atoms, double delta, double eta) {
    const double n = static_cast<double>(n_atoms);
    const Complex retard = std::sin(delta * eta) * std::exp(-kI * delta * eta);
    LaplaceRoots r;
    r.upsilon = -kI * delta + 0.5 + kI * n * retard;
    r.zeta = 0.5 * kI * n * retard - 0.5 * kI * delta +
             0.5 * n * std::exp(-kI * delta * eta);
    const Complex disc = std::sqrt(r.upsilon * r.upsilon - 4.0 * r.zeta);
    r.s_plus = 0.5 * (-r.upsilon + disc);
    r.s_minus = 0.5 * (-r.upsilon - disc);
    return r;
}

Complex heaviside_c0(double t, int n_atoms, double delta, double eta) {
    const double n = static_cast<double>(n_atoms);
    const LaplaceRoots r = laplace_roots(n_atoms, delta, eta);
    const Complex retard = std::sin(delta * eta) * std::exp(-kI * delta * eta);
    Complex sum{0.0, 0.0};
    for (const Complex& s : {r.s_plus, r.s_minus}) {
        const Complex numer = kI * n * retard - kI * delta + s;
        sum += numer / (2.0 * s + r.upsilon) * std::exp(s * t);
    }
    return sum;
}

} // namespace atomcav
