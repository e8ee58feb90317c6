#include <fbmlab/periodic.hpp>

#include <fbmlab/errors.hpp>

#include <cmath>
#include <numbers>

namespace fbmlab {

namespace {

constexpr double pi = std::numbers::pi;

void require_unit_uniform(const SampledPath& f) {
    validate(f);
    const Eigen::Index n = f.size();
    if (f.times[0] != 0.0 || f.times[n - 1] != 1.0) throw PreconditionError("periodic operators need a grid on [0, 1]");
    const double h = 1.0 / static_cast<double>(n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
        if (std::abs(f.times[i] - f.times[i - 1] - h) > 1e-9 * h) throw PreconditionError("periodic operators need a uniform grid");
    }
    if (f.values[0] != 0.0) throw PreconditionError("periodic operators need f(0) = 0");
}

// Real DFT of samples x_j = x(j P / N), j < N, at harmonics k = 1..N/2 of the period P.
void real_dft(const std::vector<double>& x, std::vector<double>& a, std::vector<double>& b) {
    const std::size_t N = x.size();
    const std::size_t K = N / 2;
    a.assign(K + 1, 0.0);
    b.assign(K + 1, 0.0);
    std::vector<double> cs(N), sn(N);
    for (std::size_t j = 0; j < N; ++j) {
        cs[j] = std::cos(2.0 * pi * static_cast<double>(j) / static_cast<double>(N));
        sn[j] = std::sin(2.0 * pi * static_cast<double>(j) / static_cast<double>(N));
    }
    for (std::size_t k = 1; k <= K; ++k) {
        double ak = 0.0, bk = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            const std::size_t idx = (k * j) % N;
            ak += x[j] * cs[idx];
            bk += x[j] * sn[idx];
        }
        const bool nyquist = (2 * k == N);
        a[k] = (nyquist ? 1.0 : 2.0) * ak / static_cast<double>(N);
        b[k] = nyquist ? 0.0 : 2.0 * bk / static_cast<double>(N);
    }
}

} // namespace

double TrigSeries::frequency(std::size_t k) const {
    const double n = static_cast<double>(k);
    return kind == Periodic::Hat ? 2.0 * pi * (n + 1.0) : (2.0 * n + 1.0) * pi;
}

double TrigSeries::operator()(double t) const {
    double v = drift * t;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double rt = frequency(k) * t;
        v += c[k] * (std::cos(rt) - 1.0) + s[k] * std::sin(rt);
    }
    return v;
}

TrigSeries periodic_frac(const TrigSeries& f, double alpha) {
    if (!(alpha > -1.0 && alpha < 1.0)) throw DomainError("periodic_frac needs alpha in (-1, 1)");
    if (f.c.size() != f.s.size()) throw PreconditionError("cosine and sine coefficient counts differ");
    TrigSeries out = f;
    const double cp = std::cos(0.5 * alpha * pi), sp = std::sin(0.5 * alpha * pi);
    for (std::size_t k = 0; k < f.c.size(); ++k) {
        const double scale = std::pow(f.frequency(k), -alpha);
        out.c[k] = scale * (f.c[k] * cp - f.s[k] * sp);
        out.s[k] = scale * (f.c[k] * sp + f.s[k] * cp);
    }
    return out;
}

TrigSeries fit_trig_series(const SampledPath& f, Periodic kind) {
    require_unit_uniform(f);
    const auto N = static_cast<std::size_t>(f.size() - 1);
    const double f1 = f.values[f.size() - 1];
    TrigSeries out;
    out.kind = kind;
    std::vector<double> a, b;
    if (kind == Periodic::Hat) {
        std::vector<double> g(N);
        for (std::size_t j = 0; j < N; ++j) g[j] = f.values[static_cast<Eigen::Index>(j)] - f1 * f.times[static_cast<Eigen::Index>(j)];
        real_dft(g, a, b);
        out.drift = f1;
        for (std::size_t k = 1; k < a.size(); ++k) {
            out.c.push_back(a[k]);
            out.s.push_back(b[k]);
        }
    } else {
        // Antiperiodic continuation h(1 + t) = f(1) - f(t) has period 2 and odd harmonics only.
        std::vector<double> h(2 * N);
        for (std::size_t j = 0; j < N; ++j) {
            h[j] = f.values[static_cast<Eigen::Index>(j)];
            h[N + j] = f1 - f.values[static_cast<Eigen::Index>(j)];
        }
        real_dft(h, a, b);
        for (std::size_t k = 1; k < a.size(); k += 2) {
            out.c.push_back(a[k]);
            out.s.push_back(b[k]);
        }
    }
    return out;
}

namespace {

SampledPath periodic_apply(const SampledPath& f, double alpha, Periodic kind) {
    const TrigSeries g = periodic_frac(fit_trig_series(f, kind), alpha);
    return sample(g, f.times, f.left_origin);
}

} // namespace

SampledPath ihat(const SampledPath& f, double alpha) { return periodic_apply(f, alpha, Periodic::Hat); }
SampledPath ibar(const SampledPath& f, double alpha) { return periodic_apply(f, alpha, Periodic::Bar); }

} // namespace fbmlab
