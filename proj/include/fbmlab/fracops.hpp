#pragma once

#include <fbmlab/path.hpp>

#include <cmath>

namespace fbmlab {

enum class Side { Plus, Minus };
enum class Inversion { T, TPrime };

// Left-sided Riemann-Liouville operator of order alpha in (-1, 1] from the first grid time tau.
// Exact on the interpolant: a boundary term f(tau)(t - tau)^alpha / Gamma(alpha + 1) plus
// closed-form cell averages of (t - s)^alpha against the increments. alpha = 0 is the identity.
SampledPath riemann_liouville(const SampledPath& f, double alpha);

// Evaluation window for itilde; grid points outside it are dropped from the output.
struct Window {
    double lo = -HUGE_VAL;
    double hi = HUGE_VAL;
};

// Normalised two-sided operator; 0 must be a grid time. Increments outside the grid count as zero.
//   Plus : (1/Gamma(a+1)) int ((t-s)_+^a - (-s)_+^a) df(s)
//   Minus: (1/Gamma(a+1)) int (s_+^a - (s-t)_+^a) df(s)
SampledPath itilde(const SampledPath& f, double alpha, Side side, Window window = {});

// Size of the contribution lost by truncating the grid, from the kernel difference at the far end
// and the oscillation of f over the outer tenth of the grid.
double itilde_tail_estimate(const SampledPath& f, double alpha, Side side, double t);

// t^alpha f(t).
SampledPath pi_mult(const SampledPath& f, double alpha);

// int_{t0}^t s^alpha df(s) from the first grid time t0 >= 0.
SampledPath pi_tilde(const SampledPath& f, double alpha);

// T: t^{2a} f(1/t).  T': t^{2a} f(1/t) - 2a int_{1/t}^inf s^{-2a-1} f(s) ds, the integral cut at
// the last grid time. The output grid is the sorted reciprocal of the positive input times.
SampledPath time_invert(const SampledPath& f, double alpha, Inversion variant);

// f - 2L t^{H-L} int_0^t f(s) s^{L-H-1} ds; needs 0 as the first grid time.
SampledPath t_hl(const SampledPath& f, double H, double L);

struct HolderParams {
    double beta;
    double gamma;
    double delta;
};

// sup over dyadic blocks [2^n, 2^{n+1}] of |f(t) - f(s)| / ((2^n)^{gamma,delta} (t - s)^beta),
// with x^{gamma,delta} = x^gamma for x <= 1 and x^delta otherwise. Non-positive times are skipped.
double holder_seminorm(const SampledPath& f, const HolderParams& p);

} // namespace fbmlab
