#ifndef ATOMCAV_DDE_HPP
#define ATOMCAV_DDE_HPP

#include <complex>
#include <vector>

#include "atomcav/model.hpp"
#include "atomcav/numeric.hpp"

namespace atomcav {

enum class Method { euler, heun };

// Uniform-grid record of the three collective amplitudes.
struct AmplitudeTrajectory {
    SystemParams params;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<Complex> c0;
    std::vector<Complex> c_lm;
    std::vector<Complex> c_rm;

    std::size_t size() const { return times.size(); }
    double t_max() const { return times.empty() ? 0.0 : times.back(); }

    // Linear interpolation on the grid; 0 before t = 0. Used by the
    // intensity map for retarded-time lookups.
    Complex interp_c0(double t) const;
    Complex interp_c_lm(double t) const;
    Complex interp_c_rm(double t) const;
};

// Integrates the coupled delay differential equations for c0, c_LM, c_RM:
//
//   dc0/dt  = -1/2 [ c0(t) + sqrt(N) (c_LM + c_RM)(t-eta) e^{i phi_M} e^{+i delta t} Theta(t-eta) ]
//   dcLM/dt = -1/2 [ sqrt(N) c0(t-eta) e^{i phi0} e^{-i delta t} Theta(t-eta)
//                    + N c_LM(t) + N c_RM(t-2 eta) e^{2 i phi_M} Theta(t-2 eta) ]
//   dcRM/dt =  same with LM <-> RM
//
// dt = eta/steps_per_delay so both lags are exact grid multiples (for eta = 0
// the delays degenerate and dt = 0.001/max(1, N)). Theta(0) = 1: a delayed
// term enters on the first grid point with t - lag >= 0. Heun evaluates the
// e^{+-i delta t} factors at the half step in both stages.
AmplitudeTrajectory integrate_collective(const SystemParams& params, double t_max,
                                         int steps_per_delay,
                                         Method method = Method::heun);

// e^{-t/2}: the mirror-free amplitude (probability decays as e^{-t}).
Complex free_decay_reference(double t);

// Max pointwise difference of |c0| between runs at dt and dt/2, on the
// coarse grid. Used to pin the integrator tolerance in tests.
double richardson_check(const SystemParams& params, double t_max,
                        int steps_per_delay, Method method = Method::heun);

} // namespace atomcav

#endif
