#include <fbmlab/path.hpp>

#include <fbmlab/errors.hpp>

#include <algorithm>
#include <cmath>

namespace fbmlab {

void validate(const SampledPath& f) {
    if (f.times.size() != f.values.size()) throw PreconditionError("times and values differ in length");
    if (f.times.size() < 2) throw PreconditionError("a path needs at least two samples");
    for (Eigen::Index i = 0; i < f.times.size(); ++i) {
        if (!std::isfinite(f.times[i]) || !std::isfinite(f.values[i]))
            throw PreconditionError("path contains non-finite entries");
        if (i > 0 && !(f.times[i] > f.times[i - 1])) throw PreconditionError("times must be strictly increasing");
    }
}

double interpolate(const SampledPath& f, double t) {
    const auto* first = f.times.data();
    const auto* last = first + f.times.size();
    if (t < *first || t > *(last - 1)) throw DomainError("interpolation point outside the sampled range");
    const auto* it = std::upper_bound(first, last, t);
    if (it == last) return f.values[f.times.size() - 1];
    const Eigen::Index k = (it - first) - 1;
    const double w = (t - f.times[k]) / (f.times[k + 1] - f.times[k]);
    return (1.0 - w) * f.values[k] + w * f.values[k + 1];
}

Vec uniform_grid(Eigen::Index n, double lo, double hi) {
    if (n < 2 || !(hi > lo)) throw PreconditionError("uniform_grid needs n >= 2 and hi > lo");
    Vec t(n);
    for (Eigen::Index i = 0; i < n; ++i) t[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    t[n - 1] = hi;
    return t;
}

Vec log_grid(Eigen::Index n, double lo, double hi) {
    if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw PreconditionError("log_grid needs n >= 2 and 0 < lo < hi");
    Vec t(n);
    const double a = std::log(lo), b = std::log(hi);
    for (Eigen::Index i = 0; i < n; ++i) t[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    t[0] = lo;
    t[n - 1] = hi;
    return t;
}

Eigen::Index find_time(const Vec& times, double t) {
    const auto* first = times.data();
    const auto* last = first + times.size();
    const auto* it = std::lower_bound(first, last, t);
    return (it != last && *it == t) ? (it - first) : -1;
}

double pow_diff(double a, double b, double p) {
    if (b == 0.0) return std::pow(a, p);
    if (b < 0.5 * a) return std::pow(a, p) - std::pow(b, p);
    return std::pow(b, p) * std::expm1(p * std::log1p((a - b) / b));
}

double power_integral(double lo, double hi, double a) {
    if (hi <= lo) return 0.0;
    if (lo == 0.0) {
        if (!(a > -1.0)) throw DomainError("power integral diverges at zero");
        return std::pow(hi, a + 1.0) / (a + 1.0);
    }
    const double p = a + 1.0;
    const double l = std::log1p((hi - lo) / lo);
    if (p == 0.0) return l;
    return std::pow(lo, p) * std::expm1(p * l) / p;
}

} // namespace fbmlab
