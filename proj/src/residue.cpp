#include "atomcav/residue.hpp"

#include <algorithm>
#include <cmath>

namespace atomcav {

namespace {
constexpr Complex kMinusI{0.0, -1.0};
}

Reconstruction reconstruct(const PoleSet& poles, std::span<const double> t_grid,
                           int per_side, const AmplitudeTrajectory* reference,
                           double central_tol) {
    if (poles.poles.empty())
        throw Error(ErrorCode::EmptyPoleSet, "no poles to reconstruct from");

    std::vector<const Pole*> central, left, right;
    for (const Pole& p : poles.poles) {
        if (std::abs(p.omega.real()) < central_tol)
            central.push_back(&p);
        else if (p.omega.real() > 0.0)
            right.push_back(&p);
        else
            left.push_back(&p);
    }
    auto by_abs_re = [](const Pole* a, const Pole* b) {
        return std::abs(a->omega.real()) < std::abs(b->omega.real());
    };
    std::sort(left.begin(), left.end(), by_abs_re);
    std::sort(right.begin(), right.end(), by_abs_re);
    if (per_side >= 0) {
        if (static_cast<std::size_t>(per_side) < left.size()) left.resize(per_side);
        if (static_cast<std::size_t>(per_side) < right.size()) right.resize(per_side);
    }

    Reconstruction rec;
    for (const Pole* p : central) rec.poles_used.push_back(p->omega);
    for (const Pole* p : left) rec.poles_used.push_back(p->omega);
    for (const Pole* p : right) rec.poles_used.push_back(p->omega);
    if (rec.poles_used.empty())
        throw Error(ErrorCode::EmptyPoleSet, "pole selection left nothing");

    std::vector<Complex> weights;
    std::vector<const Pole*> used;
    for (auto* group : {&central, &left, &right})
        for (const Pole* p : *group) {
            used.push_back(p);
            weights.push_back(p->weight);
        }

    rec.times.assign(t_grid.begin(), t_grid.end());
    rec.c0_approx.resize(rec.times.size());
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
        const double t = rec.times[i];
        Complex sum{0.0, 0.0};
        for (std::size_t j = 0; j < used.size(); ++j)
            sum += weights[j] * std::exp(kMinusI * used[j]->omega * t);
        rec.c0_approx[i] = kMinusI * sum;
    }

    if (reference != nullptr) {
        rec.has_reference = true;
        rec.p0_exact.resize(rec.times.size());
        rec.abs_error.resize(rec.times.size());
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < rec.times.size(); ++i) {
            const Complex exact = reference->interp_c0(rec.times[i]);
            rec.p0_exact[i] = std::norm(exact);
            const double err = std::abs(rec.c0_approx[i] - exact);
            rec.abs_error[i] = err;
            rec.max_error = std::max(rec.max_error, err);
            sum_sq += err * err;
        }
        rec.l2_error = std::sqrt(sum_sq / static_cast<double>(rec.times.size()));
    }
    return rec;
}

double plateau_from_pole(const PoleSet& poles, double imag_tol) {
    const Pole* bound = nullptr;
    for (const Pole& p : poles.poles) {
        if (std::abs(p.omega.imag()) <= imag_tol) {
            if (bound == nullptr || std::abs(p.omega.real()) < std::abs(bound->omega.real()))
                bound = &p;
        }
    }
    if (bound == nullptr)
        throw Error(ErrorCode::NoBoundState, "no real pole in the set");
    return std::norm(bound->weight);
}

} // namespace atomcav
