#ifndef ATOMCAV_NUMERIC_HPP
#define ATOMCAV_NUMERIC_HPP

#include <complex>
#include <functional>
#include <thread>
#include <vector>

namespace atomcav {

using Complex = std::complex<double>;

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) { v[0] = lo; return v; }
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + step * i;
    v.back() = hi;
    return v;
}

// Golden-section minimization on [a, b]; f must be unimodal there.
double golden_section_min(const std::function<double(double)>& f,
                          double a, double b, double tol_abs);

// Static block partition of [0, n) across at most `jobs` threads.
// Chunk boundaries depend only on (n, jobs), so results written by index
// are deterministic regardless of scheduling.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t, std::size_t)>& body);

// Quadratic sub-grid refinement of a local extremum at index i of (x, y);
// returns the refined abscissa (x[i] if the parabola degenerates).
double quadratic_peak_refine(const std::vector<double>& x,
                             const std::vector<double>& y, std::size_t i);

} // namespace atomcav

#endif
