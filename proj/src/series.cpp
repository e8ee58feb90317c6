#include <fbmlab/genpath.hpp>

#include <fbmlab/coeffs.hpp>
#include <fbmlab/errors.hpp>
#include <fbmlab/special.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace fbmlab {

namespace {

constexpr double pi = std::numbers::pi;

// One Gaussian mode: var_c (cos(pi m t) - 1) + var_s sin(pi m t), variances of the coefficients.
struct Mode {
    double m;
    double var_c;
    double var_s;
};

struct SeriesModel {
    double drift_var = 0.0;
    std::vector<Mode> modes;
};

SeriesModel build_modes(GeneratorKind kind, double H, std::size_t N, std::optional<double> a0) {
    SeriesModel s;
    s.modes.reserve(N);
    const double e = -2.0 * H - 1.0;
    switch (kind) {
    case GeneratorKind::BHat:
        s.drift_var = 1.0;
        for (std::size_t n = 1; n <= N; ++n) {
            const double v = 2.0 * std::pow(2.0 * pi * n, e);
            s.modes.push_back({2.0 * n, v, v});
        }
        break;
    case GeneratorKind::BBar:
        for (std::size_t n = 0; n < N; ++n) {
            const double v = 2.0 * std::pow((2.0 * n + 1.0) * pi, e);
            s.modes.push_back({2.0 * n + 1.0, v, v});
        }
        break;
    case GeneratorKind::KL:
        for (std::size_t n = 0; n < N; ++n) {
            const double v = 2.0 * std::pow((n + 0.5) * pi, e);
            s.modes.push_back({n + 0.5, 0.0, v});
        }
        break;
    case GeneratorKind::ExactTrig: {
        const double a = a0.value_or(default_a0(H));
        s.drift_var = a * a;
        for (std::size_t n = 1; n <= N; ++n) {
            const double b = b_n(H, a, n);
            if (b < 0.0) throw CoefficientError(n, b);
            s.modes.push_back({static_cast<double>(n), b, b});
        }
        break;
    }
    default: throw PreconditionError("not a series generator");
    }
    return s;
}

// On t_k = k h with 4/h an integer L, pi m t_k depends on 2m modulo L only, so modes in one class
// merge into a single Gaussian pair with the summed variance. Returns an empty model otherwise.
SeriesModel alias_modes(const SeriesModel& s, const Vec& times) {
    const double h = times[0];
    for (Eigen::Index k = 0; k < times.size(); ++k) {
        if (std::abs(times[k] - h * static_cast<double>(k + 1)) > 1e-12 * times[k]) return {};
    }
    const double Lf = 4.0 / h;
    const double L = std::round(Lf);
    if (std::abs(Lf - L) > 1e-9 * Lf || L < 1.0 || static_cast<double>(s.modes.size()) <= L) return {};
    const auto Li = static_cast<std::size_t>(L);
    std::vector<double> vc(Li, 0.0), vs(Li, 0.0);
    for (const Mode& md : s.modes) {
        const auto key = static_cast<std::size_t>(std::llround(2.0 * md.m)) % Li;
        vc[key] += md.var_c;
        vs[key] += md.var_s;
    }
    SeriesModel out{s.drift_var, {}};
    for (std::size_t key = 0; key < Li; ++key) {
        if (vc[key] > 0.0 || vs[key] > 0.0) out.modes.push_back({0.5 * static_cast<double>(key), vc[key], vs[key]});
    }
    return out;
}

SeriesModel model_for(GeneratorKind kind, const Vec& times, double H, std::size_t N, std::optional<double> a0) {
    SeriesModel s = build_modes(kind, H, N, a0);
    SeriesModel merged = alias_modes(s, times);
    return merged.modes.empty() ? s : merged;
}

// Loadings of every output time on the independent standard normals of the model.
Mat loadings(const SeriesModel& s, const Vec& times) {
    std::vector<std::pair<const Mode*, bool>> cols;  // (mode, is_cosine)
    for (const Mode& md : s.modes) {
        if (md.var_c > 0.0) cols.emplace_back(&md, true);
        if (md.var_s > 0.0) cols.emplace_back(&md, false);
    }
    const Eigen::Index drift = s.drift_var > 0.0 ? 1 : 0;
    Mat A(times.size(), drift + static_cast<Eigen::Index>(cols.size()));
    for (Eigen::Index i = 0; i < times.size(); ++i) {
        const double t = times[i];
        if (drift) A(i, 0) = std::sqrt(s.drift_var) * t;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Mode& md = *cols[c].first;
            const double x = pi * md.m * t;
            A(i, drift + static_cast<Eigen::Index>(c)) =
                cols[c].second ? std::sqrt(md.var_c) * (std::cos(x) - 1.0) : std::sqrt(md.var_s) * std::sin(x);
        }
    }
    return A;
}

} // namespace

Ensemble gen_series(GeneratorKind kind, const GeneratorConfig& cfg) {
    cfg.validate(kind);
    Ensemble e;
    e.times = cfg.output_times();
    const SeriesModel s = model_for(kind, e.times, cfg.H, cfg.n_terms, cfg.a0);
    const Mat A = loadings(s, e.times);
    e.paths = draw_linear(A, cfg.M, cfg.seed);
    e.driver_dim = A.cols();
    // Omitted variance bound sum_{n > N} 2 a_n^2 with a_n^2 ~ (pi n)^{-2H-1}.
    const double N = static_cast<double>(cfg.n_terms);
    e.truncation_bias = 4.0 * std::pow(pi, -2.0 * cfg.H - 1.0) * std::pow(N, -2.0 * cfg.H) / (2.0 * cfg.H);
    return e;
}

Mat series_covariance(GeneratorKind kind, const Vec& times, double H, std::size_t n_terms, std::optional<double> a0) {
    const Mat A = loadings(model_for(kind, times, H, n_terms, a0), times);
    return A * A.transpose();
}

} // namespace fbmlab
