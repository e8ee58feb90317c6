#include <fbmlab/fracops.hpp>

#include <fbmlab/errors.hpp>
#include <fbmlab/special.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace fbmlab {

namespace {

bool is_uniform(const Vec& t) {
    const Eigen::Index n = t.size();
    const double h = (t[n - 1] - t[0]) / static_cast<double>(n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
        if (std::abs((t[i] - t[i - 1]) - h) > 1e-12 * h) return false;
    }
    return true;
}

// Integral of (t - s)^alpha over the cell [lo, hi] with hi <= t.
double lag_cell(double t, double lo, double hi, double alpha) {
    return pow_diff(t - lo, t - hi, alpha + 1.0) / (alpha + 1.0);
}

Vec slopes(const SampledPath& f) {
    const Eigen::Index n = f.size();
    Vec m(n - 1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) m[k] = (f.values[k + 1] - f.values[k]) / (f.times[k + 1] - f.times[k]);
    return m;
}

// out[i] = sum_{k<i} m[k] * int_{cell k} (t_i - s)^alpha ds for every grid index i.
Vec causal_sums(const Vec& times, const Vec& m, double alpha) {
    const Eigen::Index n = times.size();
    Vec out = Vec::Zero(n);
    if (is_uniform(times)) {
        const double h = (times[n - 1] - times[0]) / static_cast<double>(n - 1);
        Vec w(n - 1);  // w[j]: cell integral at lag j + 1
        for (Eigen::Index j = 0; j + 1 < n; ++j) w[j] = lag_cell((j + 1) * h, 0.0, h, alpha);
        for (Eigen::Index i = 1; i < n; ++i) {
            double acc = 0.0;
            for (Eigen::Index k = 0; k < i; ++k) acc += m[k] * w[i - 1 - k];
            out[i] = acc;
        }
        return out;
    }
    for (Eigen::Index i = 1; i < n; ++i) {
        const double t = times[i];
        double acc = 0.0;
        for (Eigen::Index k = 0; k < i; ++k) acc += m[k] * lag_cell(t, times[k], times[k + 1], alpha);
        out[i] = acc;
    }
    return out;
}

void require_order(double alpha, double hi) {
    if (!(alpha > -1.0 && alpha <= hi)) throw DomainError("fractional order outside the admissible range");
}

} // namespace

SampledPath riemann_liouville(const SampledPath& f, double alpha) {
    validate(f);
    require_order(alpha, 1.0);
    if (f.times[0] != f.left_origin) throw PreconditionError("the first grid time must be the left origin");
    if (alpha == 0.0) return f;
    const double f0 = f.values[0];
    if (alpha < 0.0 && f0 != 0.0) throw PreconditionError("fractional derivative needs f(origin) = 0");

    const Eigen::Index n = f.size();
    const double tau = f.left_origin;
    const double g = gamma_fn(alpha + 1.0);
    const Vec m = slopes(f);
    SampledPath out{f.times, causal_sums(f.times, m, alpha), f.left_origin};
    for (Eigen::Index i = 0; i < n; ++i) {
        double v = out.values[i];
        if (f0 != 0.0) v += f0 * std::pow(f.times[i] - tau, alpha);
        out.values[i] = v / g;
    }
    return out;
}

SampledPath itilde(const SampledPath& f, double alpha, Side side, Window window) {
    validate(f);
    require_order(alpha, 1.0);
    if (alpha >= 1.0) throw DomainError("itilde needs alpha in (-1, 1)");
    const Eigen::Index zero = find_time(f.times, 0.0);
    if (zero < 0) throw PreconditionError("itilde needs 0 on the grid");

    const Eigen::Index n = f.size();
    const Vec m = slopes(f);
    const double g = gamma_fn(alpha + 1.0);
    const double p = alpha + 1.0;

    // Fixed part of the kernel: (-s)_+^a for Plus, s_+^a for Minus, integrated per cell.
    Vec fixed = Vec::Zero(n - 1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        const double lo = f.times[k], hi = f.times[k + 1];
        if (side == Side::Plus && hi <= 0.0) fixed[k] = pow_diff(-lo, -hi, p) / p;
        if (side == Side::Minus && lo >= 0.0) fixed[k] = pow_diff(hi, lo, p) / p;
    }
    double fixed_sum = 0.0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) fixed_sum += m[k] * fixed[k];

    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (f.times[i] >= window.lo && f.times[i] <= window.hi) idx.push_back(i);
    }
    SampledPath out{Vec(static_cast<Eigen::Index>(idx.size())), Vec(static_cast<Eigen::Index>(idx.size())),
                    f.left_origin};
    if (is_uniform(f.times) && side == Side::Plus) {
        const Vec moving = causal_sums(f.times, m, alpha);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            out.times[static_cast<Eigen::Index>(r)] = f.times[idx[r]];
            out.values[static_cast<Eigen::Index>(r)] = (moving[idx[r]] - fixed_sum) / g;
        }
        return out;
    }
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const Eigen::Index i = idx[r];
        const double t = f.times[i];
        double moving = 0.0;
        if (side == Side::Plus) {
            for (Eigen::Index k = 0; k < i; ++k) moving += m[k] * lag_cell(t, f.times[k], f.times[k + 1], alpha);
            out.values[static_cast<Eigen::Index>(r)] = (moving - fixed_sum) / g;
        } else {
            // (s - t)_+^a over cells right of t.
            for (Eigen::Index k = i; k + 1 < n; ++k)
                moving += m[k] * pow_diff(f.times[k + 1] - t, f.times[k] - t, p) / p;
            out.values[static_cast<Eigen::Index>(r)] = (fixed_sum - moving) / g;
        }
        out.times[static_cast<Eigen::Index>(r)] = t;
    }
    return out;
}

double itilde_tail_estimate(const SampledPath& f, double alpha, Side side, double t) {
    validate(f);
    const Eigen::Index n = f.size();
    const Eigen::Index outer = std::max<Eigen::Index>(2, n / 10);
    const Eigen::Index start = side == Side::Plus ? 0 : n - outer;
    const auto seg = f.values.segment(start, outer);
    const double osc = seg.maxCoeff() - seg.minCoeff();
    const double far = side == Side::Plus ? -f.times[0] : f.times[n - 1];
    const double u = std::abs(far);
    const double kdiff = std::abs(std::pow(u + std::abs(t), alpha) - std::pow(u, alpha));
    return 2.0 * kdiff * osc / gamma_fn(alpha + 1.0);
}

SampledPath pi_mult(const SampledPath& f, double alpha) {
    validate(f);
    SampledPath out = f;
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        const double t = f.times[i];
        if (t < 0.0) throw DomainError("pi_mult needs non-negative times");
        if (t == 0.0) {
            if (alpha < 0.0 && f.values[i] != 0.0) throw DomainError("t^alpha f(t) unbounded at 0");
            out.values[i] = alpha == 0.0 ? f.values[i] : 0.0;
        } else {
            out.values[i] = std::pow(t, alpha) * f.values[i];
        }
    }
    return out;
}

SampledPath pi_tilde(const SampledPath& f, double alpha) {
    validate(f);
    if (f.times[0] < 0.0) throw DomainError("pi_tilde needs non-negative times");
    const Eigen::Index n = f.size();
    const Vec m = slopes(f);
    SampledPath out{f.times, Vec::Zero(n), f.left_origin};
    double acc = 0.0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        acc += m[k] * power_integral(f.times[k], f.times[k + 1], alpha);
        out.values[k + 1] = acc;
    }
    return out;
}

SampledPath time_invert(const SampledPath& f, double alpha, Inversion variant) {
    validate(f);
    std::vector<Eigen::Index> pos;
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        if (f.times[i] > 0.0) pos.push_back(i);
    }
    if (pos.size() < 2) throw PreconditionError("time_invert needs two positive grid times");
    const auto m = static_cast<Eigen::Index>(pos.size());

    // tail[j] = int_{s_j}^{s_last} s^{-2a-1} f(s) ds on the interpolant, over positive samples.
    Vec tail = Vec::Zero(m);
    if (variant == Inversion::TPrime) {
        const double p = -2.0 * alpha - 1.0;
        for (Eigen::Index j = m - 2; j >= 0; --j) {
            const double lo = f.times[pos[j]], hi = f.times[pos[j + 1]];
            const double fl = f.values[pos[j]], fh = f.values[pos[j + 1]];
            const double slope = (fh - fl) / (hi - lo);
            const double c0 = fl - slope * lo;
            tail[j] = tail[j + 1] + c0 * power_integral(lo, hi, p) + slope * power_integral(lo, hi, p + 1.0);
        }
    }
    SampledPath out{Vec(m), Vec(m), 0.0};
    for (Eigen::Index j = 0; j < m; ++j) {
        const Eigen::Index src = m - 1 - j;
        const double s = f.times[pos[src]];
        const double t = 1.0 / s;
        double v = std::pow(t, 2.0 * alpha) * f.values[pos[src]];
        if (variant == Inversion::TPrime) v -= 2.0 * alpha * tail[src];
        out.times[j] = t;
        out.values[j] = v;
    }
    return out;
}

SampledPath t_hl(const SampledPath& f, double H, double L) {
    validate(f);
    if (!(H > 0.0) || !(L > 0.0)) throw DomainError("t_hl needs H > 0 and L > 0");
    if (f.times[0] != 0.0) throw PreconditionError("t_hl needs 0 as the first grid time");
    if (f.values[0] != 0.0) throw PreconditionError("t_hl needs f(0) = 0");
    const double p = L - H - 1.0;
    if (!(p + 2.0 > 0.0)) throw DomainError("t_hl integral diverges at 0");
    const Eigen::Index n = f.size();
    SampledPath out{f.times, Vec::Zero(n), f.left_origin};
    double acc = 0.0;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        const double lo = f.times[k], hi = f.times[k + 1];
        const double slope = (f.values[k + 1] - f.values[k]) / (hi - lo);
        const double c0 = f.values[k] - slope * lo;
        if (c0 != 0.0) acc += c0 * power_integral(lo, hi, p);
        acc += slope * power_integral(lo, hi, p + 1.0);
        out.values[k + 1] = f.values[k + 1] - 2.0 * L * std::pow(hi, H - L) * acc;
    }
    return out;
}

double holder_seminorm(const SampledPath& f, const HolderParams& p) {
    validate(f);
    std::vector<Eigen::Index> pos;
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        if (f.times[i] > 0.0) pos.push_back(i);
    }
    double sup = 0.0;
    if (pos.size() < 2) return sup;
    const int nmin = static_cast<int>(std::floor(std::log2(f.times[pos.front()])));
    const int nmax = static_cast<int>(std::floor(std::log2(f.times[pos.back()])));
    for (int e = nmin; e <= nmax; ++e) {
        const double lo = std::ldexp(1.0, e), hi = std::ldexp(1.0, e + 1);
        const double scale = lo <= 1.0 ? std::pow(lo, p.gamma) : std::pow(lo, p.delta);
        std::vector<Eigen::Index> block;
        for (auto i : pos) {
            if (f.times[i] >= lo && f.times[i] <= hi) block.push_back(i);
        }
        for (std::size_t a = 0; a < block.size(); ++a) {
            for (std::size_t b = a + 1; b < block.size(); ++b) {
                const double dt = f.times[block[b]] - f.times[block[a]];
                const double q = std::abs(f.values[block[b]] - f.values[block[a]]) / (scale * std::pow(dt, p.beta));
                sup = std::max(sup, q);
            }
        }
    }
    return sup;
}

} // namespace fbmlab
