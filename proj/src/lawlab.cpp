#include <fbmlab/lawlab.hpp>

#include <fbmlab/coeffs.hpp>
#include <fbmlab/coupled.hpp>
#include <fbmlab/errors.hpp>
#include <fbmlab/quadrature.hpp>
#include <fbmlab/special.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fbmlab {

namespace {

struct LineFit {
    double slope = 0.0;
    double se = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const auto m = static_cast<double>(x.size());
    if (x.size() < 3) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    double rss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - my - slope * (x[i] - mx);
        rss += r * r;
    }
    return {slope, std::sqrt(rss / (m - 2.0) / sxx)};
}

// Fit of log terms against log n over n in [from, N].
LineFit decay_fit(const std::vector<double>& terms, std::size_t from) {
    std::vector<double> x, y;
    for (std::size_t n = from; n <= terms.size(); ++n) {
        const double d = terms[n - 1];
        if (d > 0.0) {
            x.push_back(std::log(static_cast<double>(n)));
            y.push_back(std::log(d));
        }
    }
    return fit_line(x, y);
}

} // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Singular: return "singular";
    case Verdict::Undecided: return "undecided";
    }
    return "undecided";
}

KakutaniReport kakutani(std::span<const double> sigma2, std::span<const double> sigma2_bar) {
    if (sigma2.size() != sigma2_bar.size()) throw PreconditionError("variance sequences differ in length");
    if (sigma2.size() < 16) throw PreconditionError("Kakutani test needs at least 16 terms");
    const std::size_t N = sigma2.size();
    std::vector<double> terms(N);
    KakutaniReport r;
    r.partial_sums.resize(N);
    double acc = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        if (!(sigma2[n] > 0.0) || !(sigma2_bar[n] > 0.0)) throw DomainError("variances must be positive");
        const double d = sigma2_bar[n] / sigma2[n] - 1.0;
        terms[n] = d * d;
        acc += terms[n];
        r.partial_sums[n] = acc;
    }
    r.partial_sum = acc;
    r.tail_increment = acc - r.partial_sums[3 * N / 4 - 1];

    std::vector<double> lx, ly;
    for (std::size_t m = N / 4; m <= N; ++m) {
        if (r.partial_sums[m - 1] > 0.0) {
            lx.push_back(std::log(static_cast<double>(m)));
            ly.push_back(std::log(r.partial_sums[m - 1]));
        }
    }
    r.sum_slope = lx.size() >= 3 ? fit_line(lx, ly).slope : 0.0;

    if (acc == 0.0 || r.tail_increment <= 1e-8 * acc) {
        r.verdict = Verdict::Equivalent;
        r.decay_exponent = std::numeric_limits<double>::infinity();
        return r;
    }
    const LineFit wide = decay_fit(terms, N / 4);
    const LineFit narrow = decay_fit(terms, N / 2);
    r.decay_exponent = -wide.slope;
    r.ci_half_width = std::max(0.05, std::abs(wide.slope - narrow.slope) + 3.0 * wide.se);
    if (r.decay_exponent - r.ci_half_width > 1.0) r.verdict = Verdict::Equivalent;
    else if (r.decay_exponent + r.ci_half_width < 1.0) r.verdict = Verdict::Singular;
    else r.verdict = Verdict::Undecided;
    return r;
}

CheridReport cherid_decide(double J, double H, double lambda, std::size_t N) {
    require_hurst(J);
    require_hurst(H);
    const CoeffTable tj = coeff_table(J, default_a0(J), N);
    std::vector<double> s(N), sb(N);
    for (std::size_t n = 1; n <= N; ++n) {
        s[n - 1] = tj.b[n - 1];
        sb[n - 1] = s[n - 1] + lambda * lambda * std::pow(std::numbers::pi * static_cast<double>(n), -2.0 * H - 1.0);
    }
    CheridReport r;
    r.numeric = kakutani(s, sb);
    r.analytic = (lambda == 0.0 || H - J > 0.25) ? Verdict::Equivalent : Verdict::Singular;
    r.agree = r.numeric.verdict == r.analytic;
    return r;
}

double entropy_bound(const SampledPath& x, double H, double T) {
    validate(x);
    if (!(T > 0.0)) throw DomainError("T must be positive");
    const Eigen::Index n = x.size();
    double d1 = 0.0, d2 = 0.0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        const double s = (x.values[i + 1] - x.values[i]) / (x.times[i + 1] - x.times[i]);
        d1 = std::max(d1, std::abs(s));
        if (i + 2 < n) {
            const double s2 = (x.values[i + 2] - x.values[i + 1]) / (x.times[i + 2] - x.times[i + 1]);
            d2 = std::max(d2, std::abs(2.0 * (s2 - s) / (x.times[i + 2] - x.times[i])));
        }
    }
    return std::pow(T, 1.0 - H) * d1 + std::pow(T, 2.0 - H) * d2;
}

double pinsker_tv(double entropy) {
    if (!(entropy >= 0.0)) throw DomainError("entropy must be non-negative");
    return std::sqrt(2.0 * entropy);
}

double ergodic_cov(const SampledPath& x, double H, double u, double v, double t_min) {
    validate(x);
    if (!(u > 0.0 && v > 0.0)) throw DomainError("u and v must be positive");
    if (!(t_min > 0.0 && t_min < 1.0)) throw DomainError("t_min must lie in (0, 1)");
    const double lo = t_min * std::min(u, v), hi = std::max(u, v);
    if (x.times[0] > lo || x.times[x.size() - 1] < hi) throw DomainError("path does not cover [t_min min(u,v), max(u,v)]");

    // Breakpoints in s where either x(us) or x(vs) changes slope.
    std::vector<double> br{t_min, 1.0};
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        for (double w : {u, v}) {
            const double s = x.times[k] / w;
            if (s > t_min && s < 1.0) br.push_back(s);
        }
    }
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    const double q = -2.0 * H - 1.0;
    const auto f = [&](double s) { return interpolate(x, u * s) * interpolate(x, v * s) * std::pow(s, q); };
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) acc += quad::legendre(f, br[i], br[i + 1], 4);
    return acc / std::abs(std::log(t_min));
}

std::vector<TableRow> equivalence_table(double H, std::uint64_t seed, Eigen::Index M) {
    require_hurst(H);
    std::vector<TableRow> rows;
    const bool half = H == 0.5;
    const Verdict base = half ? Verdict::Equivalent : Verdict::Singular;

    // Riemann-Liouville against fBm from time 0: variances differ by a constant factor at every scale.
    const double g = gamma_fn(H + 0.5);
    const double ratio = 1.0 / (2.0 * H * g * g * rho(H));
    rows.push_back({"rl_vs_fbm", 0.0, base, "variance_ratio", ratio, 1.0, half ? std::abs(ratio - 1.0) < 1e-12 : std::abs(ratio - 1.0) > 1e-6});

    // From S > 0: entropy bound of the smooth difference decays like S^{2H-2}.
    {
        GeneratorConfig cfg;
        cfg.H = H;
        cfg.T = 9.0;
        cfg.n = 9 * 32;
        cfg.refine = 0;
        cfg.seed = seed;
        const CoupledGenerator gen(cfg);
        const int Ss[] = {1, 2, 4, 8};
        std::vector<double> mean_sq(4, 0.0);
        for (Eigen::Index k = 0; k < M; ++k) {
            const CoupledSample s = gen.sample(static_cast<std::uint64_t>(k));
            const Vec d = s.X - s.B;
            for (int q = 0; q < 4; ++q) {
                const Eigen::Index i0 = Ss[q] * 32 - 1;
                SampledPath y{Vec(33), Vec(33), 0.0};
                for (int j = 0; j <= 32; ++j) {
                    y.times[j] = j / 32.0;
                    y.values[j] = d[i0 + j] - d[i0];
                }
                const double b = entropy_bound(y, H, 1.0);
                mean_sq[q] += b * b;
            }
        }
        std::vector<double> lx, ly;
        for (int q = 0; q < 4; ++q) {
            lx.push_back(std::log(Ss[q]));
            ly.push_back(std::log(0.5 * mean_sq[q] / static_cast<double>(M)));
        }
        const double slope = fit_line(lx, ly).slope;
        rows.push_back({"rl_vs_fbm", 1.0, Verdict::Equivalent, "entropy_slope_in_S", slope, 2.0 * H - 2.0,
                        half || std::abs(slope - (2.0 * H - 2.0)) < 0.3});
    }

    // Periodic and antiperiodic versions: equivalent on [0, T] for T < 1, singular on [0, 1].
    {
        const std::size_t N = 2048;
        const CoeffTable t = coeff_table(H, default_a0(H), N);
        std::vector<double> s(t.b), sb(N);
        for (std::size_t n = 1; n <= N; ++n) sb[n - 1] = std::pow(std::numbers::pi * static_cast<double>(n), -2.0 * H - 1.0);
        const KakutaniReport k = kakutani(s, sb);
        for (const char* name : {"bhat_vs_fbm", "bbar_vs_fbm"}) {
            rows.push_back({name, 0.5, Verdict::Equivalent, "series_kakutani_exponent", k.decay_exponent, 6.0 - 4.0 * H,
                            k.verdict == Verdict::Equivalent});
            rows.push_back({name, 1.0, base, "", 0.0, 0.0, true});
        }
    }

    // Small time near 1/2: total variation of the periodic version against fBm is O(eps^{1-H}).
    {
        const double eps[] = {1e-2, 1e-3, 1e-4};
        std::vector<double> times;
        for (int j = 1; j <= 32; ++j) times.push_back(j / 32.0);
        for (double e : eps) {
            for (int k = 1; k <= 4; ++k) times.push_back(0.5 + e * k / 4.0);
        }
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
        GeneratorConfig cfg;
        cfg.H = H;
        cfg.times = Eigen::Map<Vec>(times.data(), static_cast<Eigen::Index>(times.size()));
        cfg.refine = 0;
        cfg.seed = seed + 1;
        const CoupledGenerator gen(cfg);
        const Eigen::Index i_half = find_time(cfg.times, 0.5);
        std::vector<double> mean_sq(3, 0.0);
        for (Eigen::Index k = 0; k < M; ++k) {
            const CoupledSample s = gen.sample(static_cast<std::uint64_t>(k));
            const Vec d = s.Bhat - s.B.head(s.Bhat.size());
            for (int q = 0; q < 3; ++q) {
                SampledPath y{Vec(5), Vec(5), 0.0};
                for (int j = 0; j <= 4; ++j) {
                    const double t = eps[q] * j / 4.0;
                    y.times[j] = t;
                    y.values[j] = j == 0 ? 0.0 : d[find_time(cfg.times, 0.5 + t)] - d[i_half];
                }
                const double b = entropy_bound(y, H, eps[q]);
                mean_sq[q] += b * b;
            }
        }
        std::vector<double> lx, ly;
        for (int q = 0; q < 3; ++q) {
            lx.push_back(std::log(eps[q]));
            ly.push_back(std::log(pinsker_tv(0.5 * mean_sq[q] / static_cast<double>(M))));
        }
        const double slope = fit_line(lx, ly).slope;
        rows.push_back({"small_time", 0.5, Verdict::Equivalent, "tv_slope_in_eps", slope, 1.0 - H,
                        half || std::abs(slope - (1.0 - H)) < 0.1});
    }
    return rows;
}

} // namespace fbmlab
