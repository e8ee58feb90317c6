#include <fbmlab/coupled.hpp>

#include <fbmlab/errors.hpp>
#include <fbmlab/quadrature.hpp>
#include <fbmlab/rng.hpp>
#include <fbmlab/special.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace fbmlab {

namespace {

// Mean over s in [lo, hi] of (x - s)^alpha, for x >= hi.
double shifted_mean(double x, double lo, double hi, double alpha) {
    return pow_diff(x - lo, x - hi, alpha + 1.0) / ((alpha + 1.0) * (hi - lo));
}

// Periodic fold: mean over the cell of sum_{m >= 1} [(m+t-s)^a - (m-s)^a - (m+t)^a + m^a], the last
// two terms being a cell-independent shift that cancels against increments summing to zero.
double hat_fold(double t, double lo, double hi, double alpha, int copies) {
    const double p = alpha + 1.0;
    double acc = 0.0;
    for (int m = 1; m <= copies; ++m) {
        const double x = m;
        acc += (shifted_mean(x + t, lo, hi, alpha) - std::pow(x + t, alpha)) -
               (shifted_mean(x, lo, hi, alpha) - std::pow(x, alpha));
    }
    // Midpoint tail: int_X^inf D(x) dx = -G(X) / p with G the same combination at exponent p.
    const double X = copies + 0.5;
    const double G = (shifted_mean(X + t, lo, hi, p) - std::pow(X + t, p)) - (shifted_mean(X, lo, hi, p) - std::pow(X, p));
    return acc - G / p;
}

// Antiperiodic fold: sum_{m >= 1} (-1)^m mean over the cell of [(m+t-s)^a - (m-s)^a].
double bar_fold(double t, double lo, double hi, double alpha, int copies) {
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(copies));
    double acc = 0.0;
    for (int m = 1; m <= copies; ++m) {
        const double x = m;
        const double term = shifted_mean(x + t, lo, hi, alpha) - shifted_mean(x, lo, hi, alpha);
        acc += (m % 2 == 0 ? term : -term);
        sums.push_back(acc);
    }
    return quad::averaged_limit(std::span<const double>(sums).last(std::min<std::size_t>(16, sums.size())));
}

} // namespace

CoupledGenerator::CoupledGenerator(const GeneratorConfig& cfg, int fold_copies) : cfg_(cfg) {
    cfg.validate(GeneratorKind::MvN);
    if (fold_copies < 16) throw PreconditionError("fold_copies must be at least 16");
    times_ = cfg.output_times();
    const double H = cfg.H, alpha = H - 0.5, p = alpha + 1.0;
    const double kap = 1.0 / gamma_fn(p);
    const Eigen::Index n = times_.size();
    const double T = times_[n - 1];

    std::vector<double> breaks(times_.data(), times_.data() + n);
    if (std::find(breaks.begin(), breaks.end(), 1.0) == breaks.end()) breaks.push_back(1.0);
    std::sort(breaks.begin(), breaks.end());
    const Vec fut = future_edges(Eigen::Map<Vec>(breaks.data(), static_cast<Eigen::Index>(breaks.size())), cfg.refine);
    const Vec past = past_edges(times_[0], cfg.trunc_factor * std::max(T, 1.0), cfg.refine);
    future_ = fut.size() - 1;
    past_ = past.size() - 1;
    unit_cells_ = 0;
    while (unit_cells_ < future_ && fut[unit_cells_ + 1] <= 1.0) ++unit_cells_;
    n_unit_ = 0;
    while (n_unit_ < n && times_[n_unit_] <= 1.0) ++n_unit_;

    Vec root(future_);
    for (Eigen::Index j = 0; j < future_; ++j) root[j] = std::sqrt(fut[j + 1] - fut[j]);

    R_ = Mat::Zero(n, future_);
    P_ = Mat::Zero(n, past_);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double t = times_[i];
        for (Eigen::Index j = 0; j < future_ && fut[j + 1] <= t; ++j)
            R_(i, j) = kap * pow_diff(t - fut[j], t - fut[j + 1], p) / (p * root[j]);
        for (Eigen::Index j = 0; j < past_; ++j) {
            const double lo = past[j], hi = past[j + 1];
            P_(i, j) = kap * (pow_diff(t - lo, t - hi, p) - pow_diff(-lo, -hi, p)) / (p * std::sqrt(hi - lo));
        }
    }

    Hhat_ = Mat::Zero(n_unit_, unit_cells_);
    Hbar_ = Mat::Zero(n_unit_, unit_cells_);
    if (alpha == 0.0) return;
    for (Eigen::Index i = 0; i < n_unit_; ++i) {
        const double t = times_[i];
        Vec F(unit_cells_);
        double weighted = 0.0;
        for (Eigen::Index j = 0; j < unit_cells_; ++j) {
            F[j] = hat_fold(t, fut[j], fut[j + 1], alpha, fold_copies);
            weighted += F[j] * root[j] * root[j];
        }
        const double drift = t - std::pow(t, p) / gamma_fn(p + 1.0);
        for (Eigen::Index j = 0; j < unit_cells_; ++j) {
            Hhat_(i, j) = drift * root[j] + kap * (F[j] - weighted) * root[j];
            Hbar_(i, j) = kap * bar_fold(t, fut[j], fut[j + 1], alpha, fold_copies) * root[j];
        }
    }
}

CoupledSample CoupledGenerator::sample(std::uint64_t stream) const {
    NormalStream ns(cfg_.seed, stream);
    Vec zp(past_), zf(future_);
    ns.fill(std::span<double>(zp.data(), static_cast<std::size_t>(past_)));
    ns.fill(std::span<double>(zf.data(), static_cast<std::size_t>(future_)));
    CoupledSample s;
    s.times = times_;
    s.X = R_ * zf;
    s.B = s.X + P_ * zp;
    const Vec zu = zf.head(unit_cells_);
    s.Bhat = s.X.head(n_unit_) + Hhat_ * zu;
    s.Bbar = s.X.head(n_unit_) + Hbar_ * zu;
    return s;
}

CoupledSample coupled_gen(const GeneratorConfig& cfg) { return CoupledGenerator(cfg).sample(0); }

} // namespace fbmlab
