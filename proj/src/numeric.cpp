#include "atomcav/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace atomcav {

double golden_section_min(const std::function<double(double)>& f,
                          double a, double b, double tol_abs) {
    constexpr double invphi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol_abs) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : 1;
    workers = std::min(workers, n);
    if (workers <= 1) {
        body(0, n);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

double quadratic_peak_refine(const std::vector<double>& x,
                             const std::vector<double>& y, std::size_t i) {
    if (i == 0 || i + 1 >= x.size()) return x[i];
    const double ym = y[i - 1], y0 = y[i], yp = y[i + 1];
    if (!std::isfinite(ym) || !std::isfinite(y0) || !std::isfinite(yp)) return x[i];
    const double denom = ym - 2.0 * y0 + yp;
    if (denom == 0.0) return x[i];
    const double shift = 0.5 * (ym - yp) / denom;
    if (std::abs(shift) > 1.0) return x[i];
    const double h = 0.5 * (x[i + 1] - x[i - 1]);
    return x[i] + shift * h;
}

} // namespace atomcav
