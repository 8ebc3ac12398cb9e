#ifndef ATOMCAV_TEST_HELPERS_HPP
#define ATOMCAV_TEST_HELPERS_HPP

#include <cmath>
#include <complex>

#include "atomcav/model.hpp"

namespace atomcav::testing {

inline SystemParams params(int n, double eta, double delta, Placement where,
                           double delta_c = 0.0) {
    SystemParams p;
    p.n_atoms = n;
    p.eta = eta;
    p.delta = delta;
    p.delta_c = delta_c;
    return validate(make_placement(where, p));
}

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

} // namespace atomcav::testing

#endif
