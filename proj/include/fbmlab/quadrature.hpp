#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace fbmlab::quad {

// Nodes and weights on [0, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss rule for the weight x^a on [0, 1], a > -1. Cached per (n, a); safe to call concurrently.
const Rule& gauss_jacobi(int n, double a);
inline const Rule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0); }

// Integral of f over [lo, hi] with an n-point Gauss-Legendre rule.
template <typename F>
double legendre(F&& f, double lo, double hi, int n = 20) {
    const Rule& r = gauss_legendre(n);
    const double len = hi - lo;
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * f(lo + len * r.nodes[i]);
    return acc * len;
}

// Integral of (x - lo)^a g(x) over [lo, hi] with g smooth.
template <typename G>
double jacobi_left(G&& g, double lo, double hi, double a, int n = 30) {
    const Rule& r = gauss_jacobi(n, a);
    const double len = hi - lo;
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * g(lo + len * r.nodes[i]);
    return acc * std::pow(len, a + 1.0);
}

// Integral of (hi - x)^a g(x) over [lo, hi] with g smooth.
template <typename G>
double jacobi_right(G&& g, double lo, double hi, double a, int n = 30) {
    const Rule& r = gauss_jacobi(n, a);
    const double len = hi - lo;
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * g(hi - len * r.nodes[i]);
    return acc * std::pow(len, a + 1.0);
}

// Integral of f over [lo, hi] where f may behave like (x - lo)^a_lo or (hi - x)^a_hi at the ends.
// A NaN exponent marks a regular end. Panels halve toward each singular end and the innermost
// panel uses the matching Gauss-Jacobi rule.
template <typename F>
double graded(F&& f, double lo, double hi, double a_lo, double a_hi, int n = 8, int levels = 16) {
    if (!(hi > lo)) return 0.0;
    const bool sing_lo = !std::isnan(a_lo);
    const bool sing_hi = !std::isnan(a_hi);
    if (sing_lo && sing_hi) {
        const double mid = 0.5 * (lo + hi);
        return graded(f, lo, mid, a_lo, NAN, n, levels) + graded(f, mid, hi, NAN, a_hi, n, levels);
    }
    if (!sing_lo && !sing_hi) return legendre(f, lo, hi, n);
    double acc = 0.0;
    double width = 0.5 * (hi - lo);
    for (int k = 0; k < levels; ++k, width *= 0.5) {
        if (sing_lo) acc += legendre(f, lo + width, lo + 2.0 * width, n);
        else acc += legendre(f, hi - 2.0 * width, hi - width, n);
    }
    width *= 2.0;
    if (sing_lo) {
        acc += jacobi_left([&](double x) { return f(x) * std::pow(x - lo, -a_lo); }, lo, lo + width, a_lo, n);
    } else {
        acc += jacobi_right([&](double x) { return f(x) * std::pow(hi - x, -a_hi); }, hi - width, hi, a_hi, n);
    }
    return acc;
}

// Limit of an alternating series from its trailing partial sums by repeated pairwise averaging.
// Returns the limit estimate; err receives the spread of the last averaging level.
double averaged_limit(std::span<const double> partial_sums, double* err = nullptr);

} // namespace fbmlab::quad
