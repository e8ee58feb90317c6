#include <fbmlab/genpath.hpp>

#include <fbmlab/errors.hpp>
#include <fbmlab/kernels.hpp>
#include <fbmlab/rng.hpp>
#include <fbmlab/special.hpp>

#include <Eigen/Cholesky>

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace fbmlab {

namespace {

constexpr std::array<std::pair<std::string_view, GeneratorKind>, 14> generator_ids{{
    {"cholesky", GeneratorKind::Cholesky},
    {"mvn", GeneratorKind::MvN},
    {"mg", GeneratorKind::MG},
    {"rl", GeneratorKind::RL},
    {"bhat", GeneratorKind::BHat},
    {"bbar", GeneratorKind::BBar},
    {"exact_trig", GeneratorKind::ExactTrig},
    {"KL", GeneratorKind::KL},
    {"stationary_A", GeneratorKind::StationaryA},
    {"exact", GeneratorKind::ExactTrig},
    {"kl", GeneratorKind::KL},
    {"stationary", GeneratorKind::StationaryA},
    {"MvN", GeneratorKind::MvN},
    {"MG", GeneratorKind::MG},
}};

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Divides column j by sqrt(edges[j+1] - edges[j]), turning cell integrals into loadings on N(0, 1).
void scale_by_cells(Mat& A, const Vec& edges) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) A.col(j) /= std::sqrt(edges[j + 1] - edges[j]);
}

// int over [lo, hi] of (t - s)_+^alpha, for hi <= t.
double causal_cell(double t, double lo, double hi, double alpha) {
    return pow_diff(t - lo, t - hi, alpha + 1.0) / (alpha + 1.0);
}

double horizon(const Vec& times) { return times[times.size() - 1]; }

} // namespace

std::string_view to_string(GeneratorKind k) {
    for (const auto& [id, kind] : generator_ids) {
        if (kind == k) return id;
    }
    return "unknown";
}

GeneratorKind parse_generator(std::string_view id) {
    for (const auto& [name, kind] : generator_ids) {
        if (name == id) return kind;
    }
    throw PreconditionError("unknown generator id: " + std::string(id));
}

void GeneratorConfig::validate(GeneratorKind kind) const {
    if (kind == GeneratorKind::RL || kind == GeneratorKind::KL) {
        if (!(H > 0.0)) throw DomainError("H must be positive");
    } else {
        require_hurst(H);
    }
    if (times.size() == 0) {
        if (n < 2) throw PreconditionError("n must be at least 2");
        if (!(T > 0.0)) throw PreconditionError("T must be positive");
    } else {
        if (times.size() < 2) throw PreconditionError("explicit grid needs at least two points");
        if (!(times[0] > 0.0)) throw PreconditionError("explicit grid must exclude t = 0");
        for (Eigen::Index i = 1; i < times.size(); ++i) {
            if (!(times[i] > times[i - 1])) throw PreconditionError("explicit grid must increase strictly");
        }
    }
    if (M < 1) throw PreconditionError("M must be at least 1");
    if (n_terms < 1) throw PreconditionError("n_terms must be at least 1");
    if (!(trunc_factor >= 10.0)) throw PreconditionError("trunc_factor must be at least 10");
    if (refine < 0 || refine > 40) throw PreconditionError("refine must lie in [0, 40]");
}

Vec GeneratorConfig::output_times() const {
    if (times.size() > 0) return times;
    Vec t(n);
    for (Eigen::Index k = 0; k < n; ++k) t[k] = T * static_cast<double>(k + 1) / static_cast<double>(n);
    t[n - 1] = T;
    return t;
}

SampledPath Ensemble::path(Eigen::Index k) const {
    SampledPath p{Vec(times.size() + 1), Vec(times.size() + 1), 0.0};
    p.times[0] = 0.0;
    p.values[0] = 0.0;
    p.times.tail(times.size()) = times;
    p.values.tail(times.size()) = paths.row(k).transpose();
    return p;
}

Vec future_edges(const Vec& out_times, int refine) {
    std::vector<double> e{0.0};
    double prev = 0.0;
    for (Eigen::Index i = 0; i < out_times.size(); ++i) {
        const double next = out_times[i];
        const double len = next - prev;
        for (int k = refine; k >= 1; --k) e.push_back(prev + len * std::ldexp(1.0, -k));
        for (int k = 2; k <= refine; ++k) e.push_back(next - len * std::ldexp(1.0, -k));
        e.push_back(next);
        prev = next;
    }
    return Eigen::Map<Vec>(e.data(), static_cast<Eigen::Index>(e.size()));
}

Vec past_edges(double h, double horizon_len, int refine) {
    std::vector<double> e;  // built as positive distances, then mirrored
    for (int k = refine; k >= 1; --k) e.push_back(h * std::ldexp(1.0, -k));
    for (double d = h; d < horizon_len; d *= 1.1) e.push_back(d);
    e.push_back(horizon_len);
    Vec out(static_cast<Eigen::Index>(e.size()) + 1);
    const auto m = static_cast<Eigen::Index>(e.size());
    for (Eigen::Index i = 0; i < m; ++i) out[i] = -e[static_cast<std::size_t>(m - 1 - i)];
    out[m] = 0.0;
    return out;
}

Mat draw_linear(const Mat& A, Eigen::Index M, std::uint64_t seed) {
    constexpr Eigen::Index block = 512;
    const Eigen::Index d = A.cols();
    Mat out(M, A.rows());
    RowMat Z(std::min(block, M), d);
    for (Eigen::Index start = 0; start < M; start += block) {
        const Eigen::Index b = std::min(block, M - start);
        for (Eigen::Index r = 0; r < b; ++r) {
            NormalStream ns(seed, static_cast<std::uint64_t>(start + r));
            ns.fill(std::span<double>(Z.row(r).data(), static_cast<std::size_t>(d)));
        }
        out.middleRows(start, b).noalias() = Z.topRows(b) * A.transpose();
    }
    return out;
}

Mat fbm_covariance(const Vec& times, double H) {
    const double r = rho(H);
    const Eigen::Index n = times.size();
    Mat C(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) C(i, j) = C(j, i) = fbm_cov(times[i], times[j], H, r);
    }
    return C;
}

double rl_variance(double t, double H) {
    const double g = gamma_fn(H + 0.5);
    return std::pow(t, 2.0 * H) / (2.0 * H * g * g);
}

CovarianceCheck covariance_zscore(const Mat& paths, const Mat& target) {
    const Eigen::Index M = paths.rows(), n = paths.cols();
    if (target.rows() != n || target.cols() != n) throw PreconditionError("target covariance has the wrong shape");
    if (M < 2) throw PreconditionError("need at least two paths");
    CovarianceCheck best;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            const Vec prod = paths.col(i).cwiseProduct(paths.col(j));
            const double mean = prod.mean();
            const double var = (prod.array() - mean).square().sum() / static_cast<double>(M - 1);
            const double z = (mean - target(i, j)) / std::sqrt(var / static_cast<double>(M));
            if (std::abs(z) > best.max_abs_z) best = {std::abs(z), i, j};
        }
    }
    return best;
}

Ensemble gen_cholesky(const GeneratorConfig& cfg) {
    cfg.validate(GeneratorKind::Cholesky);
    Ensemble e;
    e.times = cfg.output_times();
    Mat C = fbm_covariance(e.times, cfg.H);
    Eigen::LLT<Mat> llt(C);
    if (llt.info() != Eigen::Success) {
        e.jitter = 1e-12 * rho(cfg.H) * std::pow(horizon(e.times), 2.0 * cfg.H);
        C.diagonal().array() += e.jitter;
        llt.compute(C);
        if (llt.info() != Eigen::Success) throw NumericError("covariance is not positive definite after jitter");
    }
    const Mat L = llt.matrixL();
    e.paths = draw_linear(L, cfg.M, cfg.seed);
    e.driver_dim = L.cols();
    return e;
}

Ensemble gen_rl(const GeneratorConfig& cfg) {
    cfg.validate(GeneratorKind::RL);
    Ensemble e;
    e.times = cfg.output_times();
    const double alpha = cfg.H - 0.5;
    const Vec edges = future_edges(e.times, cfg.refine);
    const double g = gamma_fn(alpha + 1.0);
    Mat A = Mat::Zero(e.times.size(), edges.size() - 1);
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j < A.cols() && edges[j + 1] <= e.times[i]; ++j)
            A(i, j) = causal_cell(e.times[i], edges[j], edges[j + 1], alpha) / g;
    }
    scale_by_cells(A, edges);
    e.paths = draw_linear(A, cfg.M, cfg.seed);
    e.driver_dim = A.cols();
    return e;
}

Ensemble gen_mvn(const GeneratorConfig& cfg) {
    cfg.validate(GeneratorKind::MvN);
    Ensemble e;
    e.times = cfg.output_times();
    const double alpha = cfg.H - 0.5;
    const double T = horizon(e.times);
    const double A_len = cfg.trunc_factor * T;
    const Vec fut = future_edges(e.times, cfg.refine);
    const Vec past = past_edges(e.times[0], A_len, cfg.refine);
    const Eigen::Index np = past.size() - 1, nf = fut.size() - 1;
    const double g = gamma_fn(alpha + 1.0);
    const double p = alpha + 1.0;
    Mat A = Mat::Zero(e.times.size(), np + nf);
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        const double t = e.times[i];
        for (Eigen::Index j = 0; j < np; ++j) {
            const double lo = past[j], hi = past[j + 1];
            A(i, j) = (pow_diff(t - lo, t - hi, p) - pow_diff(-lo, -hi, p)) / (p * g * std::sqrt(hi - lo));
        }
        for (Eigen::Index j = 0; j < nf && fut[j + 1] <= t; ++j)
            A(i, np + j) = causal_cell(t, fut[j], fut[j + 1], alpha) / (g * std::sqrt(fut[j + 1] - fut[j]));
    }
    e.paths = draw_linear(A, cfg.M, cfg.seed);
    e.driver_dim = A.cols();
    e.truncation_bias = alpha == 0.0 ? 0.0
                                     : alpha * alpha * T * T * std::pow(A_len, 2.0 * alpha - 1.0) /
                                           ((1.0 - 2.0 * alpha) * g * g);
    return e;
}

namespace {

Mat mg_loadings(const Vec& times, const Vec& edges, double H) {
    Mat A = kernel_cell_matrix(times, edges, KernelSpec(0.5, H));
    scale_by_cells(A, edges);
    return A;
}

} // namespace

Ensemble gen_mg(const GeneratorConfig& cfg) {
    cfg.validate(GeneratorKind::MG);
    Ensemble e;
    e.times = cfg.output_times();
    const Vec edges = future_edges(e.times, cfg.refine);
    const Mat A = mg_loadings(e.times, edges, cfg.H);
    e.paths = draw_linear(A, cfg.M, cfg.seed);
    e.driver_dim = A.cols();
    return e;
}

Ensemble gen_stationary(const GeneratorConfig& cfg) {
    cfg.validate(GeneratorKind::StationaryA);
    Ensemble e;
    e.times = cfg.output_times();
    const Vec edges = future_edges(e.times, cfg.refine);
    const Eigen::Index n = e.times.size();
    Mat A(n + 1, edges.size() - 1);
    A.topRows(n) = mg_loadings(e.times, edges, cfg.H);
    const double alpha = cfg.H - 0.5;
    const double c = -rho(cfg.H) * cfg.H * gamma_fn(cfg.H + 0.5);
    for (Eigen::Index j = 0; j + 1 < edges.size(); ++j)
        A(n, j) = c * power_integral(edges[j], edges[j + 1], alpha) / std::sqrt(edges[j + 1] - edges[j]);
    const Mat draws = draw_linear(A, cfg.M, cfg.seed);
    e.paths = draws.leftCols(n);
    e.aux = draws.col(n);
    e.driver_dim = A.cols();
    return e;
}

Ensemble simulate(GeneratorKind kind, const GeneratorConfig& cfg) {
    switch (kind) {
    case GeneratorKind::Cholesky: return gen_cholesky(cfg);
    case GeneratorKind::MvN: return gen_mvn(cfg);
    case GeneratorKind::MG: return gen_mg(cfg);
    case GeneratorKind::RL: return gen_rl(cfg);
    case GeneratorKind::StationaryA: return gen_stationary(cfg);
    case GeneratorKind::BHat:
    case GeneratorKind::BBar:
    case GeneratorKind::ExactTrig:
    case GeneratorKind::KL: return gen_series(kind, cfg);
    }
    throw PreconditionError("unknown generator");
}

} // namespace fbmlab
