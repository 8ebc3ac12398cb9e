#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "atomcav/dde.hpp"
#include "atomcav/single_mode.hpp"
#include "atomcav/spectral.hpp"
#include "helpers.hpp"

using namespace atomcav;
using atomcav::testing::params;
using atomcav::testing::rel_diff;
using std::numbers::pi;

namespace {

double max_c0_error(const AmplitudeTrajectory& traj,
                    const std::function<Complex(double)>& model) {
    double err = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k)
        err = std::max(err, std::abs(traj.c0[k] - model(traj.times[k])));
    return err;
}

} // namespace

TEST_CASE("rabi_c0 basics") {
    CHECK(std::abs(rabi_c0(0.0, 100, 0.0) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(rabi_frequency(100, 15.0) == doctest::Approx(std::sqrt(425.0)));
    CHECK(rabi_frequency(100, 15.0) == doctest::Approx(20.6155).epsilon(1e-4));
    // delta = 0: envelope e^{-t/4}, oscillation at sqrt(2N)
    const double t_half = 2.0 * pi / std::sqrt(200.0);  // one full cycle
    CHECK(std::abs(std::abs(rabi_c0(t_half, 100, 0.0)) - std::exp(-t_half / 4.0)) <
          2e-3);
}

TEST_CASE("rabi_mirror basics") {
    CHECK(std::abs(rabi_mirror(0.0, 100, 0.0, pi / 2)) < 1e-15);
    // peak population per array approaches 1/2 at the first sine maximum
    const double t_peak = pi / std::sqrt(200.0);
    const double peak = std::norm(rabi_mirror(t_peak, 100, 0.0, pi / 2));
    CHECK(std::abs(peak - 0.5) < 0.06);
}

TEST_CASE("mirror amplitude matches the integrator in the regime") {
    const auto p = params(100, 1e-5, 0.0, Placement::antinode);
    const AmplitudeTrajectory traj = integrate_collective(p, 1.0, 1);
    const double phi_m = derive(p).phi_m;
    double err = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k)
        err = std::max(err, std::abs(traj.c_lm[k] -
                                     rabi_mirror(traj.times[k], 100, 0.0, phi_m)));
    CHECK(err < 1e-2);
}

TEST_CASE("avoided crossing eigenvalues") {
    CHECK(avoided_crossing(100, 0.0).omega_plus == doctest::Approx(14.1421).epsilon(1e-4));
    CHECK(avoided_crossing(100, 15.0).omega_plus == doctest::Approx(20.6155).epsilon(1e-4));
    CHECK(avoided_crossing(100, 15.0).omega_minus ==
          doctest::Approx(-20.6155).epsilon(1e-4));
    // large detuning: branches approach +-|delta|
    CHECK(rel_diff(avoided_crossing(100, 100.0).omega_plus, 100.0) < 0.01);
}

TEST_CASE("pole pair separation equals the hybridization gap at N eta << 1") {
    for (double delta : {0.0, 5.0, 15.0}) {
        const auto p = params(100, 1e-5, delta, Placement::antinode);
        const PoleSet set = find_poles(p, -40.0, 40.0, 20001);
        REQUIRE(set.poles.size() >= 2);
        // two dominant poles by weight
        std::vector<const Pole*> by_w;
        for (const Pole& pole : set.poles) by_w.push_back(&pole);
        std::sort(by_w.begin(), by_w.end(), [](const Pole* a, const Pole* b) {
            return std::abs(a->weight) > std::abs(b->weight);
        });
        const double sep =
            std::abs(by_w[0]->omega.real() - by_w[1]->omega.real());
        CHECK(rel_diff(sep, rabi_frequency(100, delta)) < 0.02);
    }
}

TEST_CASE("laplace roots: printed limits at delta = 0") {
    const LaplaceRoots r = laplace_roots(100, 0.0, 1e-4);
    CHECK(std::abs(r.upsilon - Complex(0.5, 0.0)) < 1e-12);
    CHECK(std::abs(r.zeta - Complex(50.0, 0.0)) < 1e-12);
    const Complex disc = 2.0 * r.s_plus + r.upsilon;  // sqrt(Y^2 - 4 zeta)
    CHECK(rel_diff(std::abs(disc.imag()), std::sqrt(200.0)) < 1e-3);
    // the sqrt approaches i sqrt(2N) as N grows
    const LaplaceRoots big = laplace_roots(100000, 0.0, 1e-6);
    const Complex disc_big = 2.0 * big.s_plus + big.upsilon;
    CHECK(rel_diff(std::abs(disc_big.imag()), std::sqrt(200000.0)) < 1e-6);
}

TEST_CASE("laplace discriminant matches the avoided-crossing gap") {
    const LaplaceRoots r = laplace_roots(100, 15.0, 1e-4);
    const Complex disc = 2.0 * r.s_plus + r.upsilon;
    CHECK(rel_diff(std::abs(disc.imag()), std::sqrt(425.0)) < 0.01);
}

TEST_CASE("laplace roots are stable across the regime scan") {
    for (int n : {10, 100, 400})
        for (double delta : {0.0, 5.0, 15.0})
            for (double eta : {1e-5, 1e-4, 1e-3}) {
                const LaplaceRoots r = laplace_roots(n, delta, eta);
                CHECK(r.s_plus.real() <= 1e-12);
                CHECK(r.s_minus.real() <= 1e-12);
            }
}

TEST_CASE("DDE converges to rabi_c0 as eta -> 0") {
    double prev = 1e9;
    for (double eta : {1e-3, 1e-4, 1e-5}) {
        const auto p = params(100, eta, 0.0, Placement::antinode);
        const int spd = std::max(1, static_cast<int>(std::lround(eta / 2e-5)));
        const AmplitudeTrajectory traj = integrate_collective(p, 1.0, spd);
        const double err =
            max_c0_error(traj, [](double t) { return rabi_c0(t, 100, 0.0); });
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-2);  // eta = 1e-5 endpoint
}

TEST_CASE("heaviside inversion tracks the DDE closely even with detuning") {
    for (double delta : {0.0, 15.0}) {
        const auto p = params(100, 1e-5, delta, Placement::antinode);
        const AmplitudeTrajectory traj = integrate_collective(p, 1.0, 1);
        const double err = max_c0_error(
            traj, [&](double t) { return heaviside_c0(t, 100, delta, 1e-5); });
        CHECK(err < 5e-3);
    }
}

TEST_CASE("heaviside inversion starts at c0(0) = 1") {
    for (double delta : {0.0, 7.0, 15.0})
        CHECK(std::abs(heaviside_c0(0.0, 100, delta, 1e-4) - Complex(1.0, 0.0)) <
              1e-12);
}

TEST_CASE("node limit: emitter frozen, mirrors empty") {
    const auto p = params(100, 1e-4, 0.0, Placement::node);
    const AmplitudeTrajectory traj = integrate_collective(p, 1.0, 2);
    double c0_dev = 0.0, mirror_amp = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        c0_dev = std::max(c0_dev, std::abs(traj.c0[k] - Complex(1.0, 0.0)));
        mirror_amp = std::max(mirror_amp, std::abs(traj.c_lm[k]));
    }
    CHECK(c0_dev < 0.02);
    CHECK(mirror_amp < 0.1);
}
