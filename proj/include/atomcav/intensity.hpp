#ifndef ATOMCAV_INTENSITY_HPP
#define ATOMCAV_INTENSITY_HPP

#include <span>
#include <utility>
#include <vector>

#include "atomcav/dde.hpp"

namespace atomcav {

// Normalized field intensity I(x,t)/I0: the coherent six-term sum of the
// emitter and two mirror sources, each split into right- and left-going
// parts with carriers e^{-i omega_0 (t -+ x)} and e^{-i omega_M (t -+ (x +- d))}.
// The carrier is reconstructed from omega_0*d/v = phi0 + 2*pi*K; the
// amplitudes are K-independent, only the plotted fringes change.
struct IntensityMap {
    std::vector<double> x;       // v/gamma units
    std::vector<double> t;
    std::vector<double> values;  // row-major: values[it*x.size() + ix]
    double carrier_phi0 = 0.0;
    int fringe_count = 0;
    double delta = 0.0;

    double at(std::size_t it, std::size_t ix) const {
        return values[it * x.size() + ix];
    }
};

// Three right-going and three left-going terms summed separately.
// |R+L|^2 is the full intensity, |R|^2+|L|^2 the fringe-free one.
std::pair<Complex, Complex> directional_split(const AmplitudeTrajectory& traj,
                                              double x, double t);

// Throws TrajectoryTooShort unless the trajectory covers
// max(t) + max|x| + eta. jobs > 1 parallelizes over t rows.
IntensityMap intensity_map(const AmplitudeTrajectory& traj,
                           std::span<const double> x_grid,
                           std::span<const double> t_grid, int jobs = 1);

} // namespace atomcav

#endif
