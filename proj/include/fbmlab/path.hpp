#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>

namespace fbmlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// A path known at strictly increasing times and read as its piecewise-linear interpolant.
struct SampledPath {
    Vec times;
    Vec values;
    double left_origin = 0.0;

    [[nodiscard]] Eigen::Index size() const { return times.size(); }
};

// Throws PreconditionError unless times are finite, strictly increasing and sized like values.
void validate(const SampledPath& f);

// Linear interpolant at t; t must lie inside [times.front(), times.back()].
double interpolate(const SampledPath& f, double t);

Vec uniform_grid(Eigen::Index n, double lo, double hi);
Vec log_grid(Eigen::Index n, double lo, double hi);

template <typename F>
SampledPath sample(F&& f, const Vec& times, double left_origin = 0.0) {
    SampledPath p{times, Vec(times.size()), left_origin};
    for (Eigen::Index i = 0; i < times.size(); ++i) p.values[i] = f(times[i]);
    return p;
}

// Index of t in times if present (exact match), otherwise -1.
Eigen::Index find_time(const Vec& times, double t);

// a^p - b^p for a >= b >= 0 without cancellation when a and b are close.
double pow_diff(double a, double b, double p);

// Integral of x^a over [lo, hi] with 0 <= lo <= hi.
double power_integral(double lo, double hi, double a);

} // namespace fbmlab
