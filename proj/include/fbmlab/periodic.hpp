#pragma once

#include <fbmlab/path.hpp>

#include <cstddef>
#include <vector>

namespace fbmlab {

// Hat: frequencies 2 pi n (n >= 1) plus a drift t. Bar: frequencies (2n + 1) pi (n >= 0).
enum class Periodic { Hat, Bar };

// drift * t + sum_k c[k] (cos(r_k t) - 1) + s[k] sin(r_k t).
struct TrigSeries {
    Periodic kind = Periodic::Hat;
    double drift = 0.0;
    std::vector<double> c;
    std::vector<double> s;

    [[nodiscard]] double frequency(std::size_t k) const;
    [[nodiscard]] double operator()(double t) const;
};

// Applies the periodic operator of order alpha in (-1, 1): each frequency pair is scaled by r^-alpha
// and rotated by alpha pi / 2. The drift is left unchanged.
TrigSeries periodic_frac(const TrigSeries& f, double alpha);

// Trigonometric interpolant of a path sampled on a uniform grid of [0, 1] with f(0) = 0.
TrigSeries fit_trig_series(const SampledPath& f, Periodic kind);

// The periodic operators on sampled paths, through the trigonometric interpolant.
SampledPath ihat(const SampledPath& f, double alpha);
SampledPath ibar(const SampledPath& f, double alpha);

} // namespace fbmlab
