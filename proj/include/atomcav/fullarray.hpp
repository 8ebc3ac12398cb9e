#ifndef ATOMCAV_FULLARRAY_HPP
#define ATOMCAV_FULLARRAY_HPP

#include <vector>

#include "atomcav/dde.hpp"
#include "atomcav/model.hpp"

namespace atomcav {

// Brute-force per-atom simulator over all 2N+1 amplitudes, used as an
// independent oracle for the collective reduction. Atom 0 is the emitter;
// indices 1..N are the left array (innermost first), N+1..2N the right.
//
// It keeps the approximations implicit in the collective equations: the
// lambda_0/2 lattice contributes a phase of pi per site while intra-array
// retardation is dropped, so every pairwise delay is one of {0, eta, 2 eta}.
// Positions are stored anyway and the delay rounding is asserted against
// them rather than silently applied.
struct FullArrayTrajectory {
    SystemParams params;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<double> positions;               // x_0 = 0, then left, then right
    std::vector<std::vector<Complex>> amplitudes;  // [atom][step]

    std::size_t atom_count() const { return amplitudes.size(); }
};

// carrier_fringes sets lambda_0 via omega_0*d/v = phi0 + 2*pi*K for the
// stored positions; 0 picks 4N+8, deep enough in omega_0 >> N gamma that the
// lattice span stays below half a delay step. Throws OracleTooLarge for
// n_atoms > max_atoms and ValidationError if any pairwise distance fails to
// round to {0, eta, 2 eta}.
FullArrayTrajectory integrate_fullarray(const SystemParams& params, double t_max,
                                        int steps_per_delay, int max_atoms = 8,
                                        int carrier_fringes = 0,
                                        Method method = Method::heun);

// Collective projections c_LM = sum_j c_j e^{(j+1) i pi}/sqrt(N) (left,
// j = -1..-N) and c_RM = sum_j c_j e^{(j-1) i pi}/sqrt(N) (right, j = 1..N).
struct ProjectedSeries {
    std::vector<Complex> c_lm;
    std::vector<Complex> c_rm;
};
ProjectedSeries collective_project(const FullArrayTrajectory& full);

// Max over the grid of |projected - collective| across c0, c_LM, c_RM at
// matched dt; the headline oracle-equivalence metric.
double oracle_deviation(const SystemParams& params, double t_max,
                        int steps_per_delay, Method method = Method::heun);

} // namespace atomcav

#endif
