#include <fbmlab/kernels.hpp>

#include <fbmlab/errors.hpp>
#include <fbmlab/fracops.hpp>
#include <fbmlab/quadrature.hpp>
#include <fbmlab/special.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace fbmlab {

namespace {

constexpr double series_limit = 0.25;
constexpr double table_hi = 1e6;
constexpr double table_step = 1.0 / 64.0;

// int_0^w ((1+x)^b - 1) x^{a-1} dx.
double weighted_integral(double w, double a, double b) {
    if (b == 0.0) return 0.0;
    if (w <= series_limit) {
        double coef = 1.0, sum = 0.0, wk = std::pow(w, a);
        for (int k = 1; k < 200; ++k) {
            coef *= (b - k + 1.0) / k;
            wk *= w;
            const double term = coef * wk / (k + a);
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
        }
        return sum;
    }
    const auto q = [b](double x) { return std::expm1(b * std::log1p(x)) / x; };
    const double head_hi = std::min(w, 1.0);
    double acc = quad::jacobi_left(q, 0.0, head_hi, a, 30);
    const auto f = [a, b](double x) { return std::expm1(b * std::log1p(x)) * std::pow(x, a - 1.0); };
    for (double lo = 1.0; lo < w; lo *= 2.0) acc += quad::legendre(f, lo, std::min(2.0 * lo, w), 20);
    return acc;
}

// Exponent e with K(t, s) ~ s^e as s -> 0.
double origin_exponent(const KernelSpec& k) {
    const double a = k.a(), b = k.b();
    double c = a;
    if (b > 0.0) c = a + b;
    if (b < 0.0) c = std::max(a + b, 0.0);
    return a - c;
}

} // namespace

KernelSpec::KernelSpec(double j, double h) : J(j), H(h) {
    if (!(J > 0.0 && J < 1.0 && H > 0.0 && H < 1.0)) throw DomainError("kernel orders J and H must lie in (0, 1)");
}

double phi_of_w(double w, const KernelSpec& k) {
    if (std::isnan(w) || w < 0.0) throw DomainError("phi needs u > 1");
    const double a = k.a();
    if (a == 0.0) return 1.0;
    if (w == 0.0) {
        if (a > 0.0) return 0.0;
        throw DomainError("phi is unbounded at u = 1 when H < J");
    }
    return std::pow(w, a) + a * weighted_integral(w, a, k.b());
}

double phi_JH(double u, const KernelSpec& k) {
    if (!(u >= 1.0)) throw DomainError("phi needs u >= 1");
    return phi_of_w(u - 1.0, k);
}

double phi_prime(double u, const KernelSpec& k) {
    if (!(u > 1.0)) throw DomainError("phi' needs u > 1");
    return k.a() * std::pow(u - 1.0, k.a() - 1.0) * std::pow(u, k.b());
}

PhiTable::PhiTable(const KernelSpec& k) : spec_(k), x_lo_(std::log(series_limit)), step_(table_step) {
    const auto count = static_cast<std::size_t>(std::ceil((std::log(table_hi) - x_lo_) / step_)) + 1;
    value_.resize(count);
    slope_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double w = std::exp(x_lo_ + step_ * static_cast<double>(i));
        value_[i] = phi_of_w(w, k);
        slope_[i] = k.a() * std::pow(w, k.a()) * std::pow(1.0 + w, k.b());  // d phi / d log w
    }
}

double PhiTable::operator()(double w) const {
    if (!(w > series_limit) || w >= table_hi) return phi_of_w(w, spec_);
    const double x = (std::log(w) - x_lo_) / step_;
    const auto i = std::min(static_cast<std::size_t>(x), value_.size() - 2);
    const double s = x - static_cast<double>(i);
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * value_[i] + (s3 - 2 * s2 + s) * step_ * slope_[i] +
           (-2 * s3 + 3 * s2) * value_[i + 1] + (s3 - s2) * step_ * slope_[i + 1];
}

std::shared_ptr<const PhiTable> phi_table(const KernelSpec& k) {
    static std::mutex mtx;
    static std::map<std::pair<double, double>, std::shared_ptr<const PhiTable>> tables;
    std::lock_guard lock(mtx);
    auto& slot = tables[{k.J, k.H}];
    if (!slot) slot = std::make_shared<const PhiTable>(k);
    return slot;
}

double K0p(double t, double s, const KernelSpec& k) {
    if (!(s > 0.0 && t > s)) throw DomainError("K0p needs 0 < s < t");
    return phi_table(k)->operator()((t - s) / s) * std::pow(s, k.a()) / gamma_fn(k.a() + 1.0);
}

double Kplus(double t, double s, const KernelSpec& k) {
    if (!(s < t && t < 0.0)) throw DomainError("Kplus needs s < t < 0");
    const double w = (t - s) / (-t);
    return phi_of_w(w, k) * std::pow(-t, 2.0 * k.H) * std::pow(-s, -k.H - k.J) / gamma_fn(k.a() + 1.0);
}

namespace {

double cell_integral(const PhiTable& table, double g, double t, double lo, double hi, const KernelSpec& k) {
    const double a = k.a();
    const auto kern = [&](double s) { return table((t - s) / s) * std::pow(s, a); };
    const double a_lo = lo == 0.0 ? origin_exponent(k) : NAN;
    const double a_hi = hi == t ? a : NAN;
    return quad::graded(kern, lo, hi, a_lo, a_hi, 8, 16) / g;
}

} // namespace

double kernel_cell_integral(double t, double lo, double hi, const KernelSpec& k) {
    if (!(lo >= 0.0 && hi > lo && t >= hi)) throw DomainError("kernel cell must satisfy 0 <= lo < hi <= t");
    return cell_integral(*phi_table(k), gamma_fn(k.a() + 1.0), t, lo, hi, k);
}

Mat kernel_cell_matrix(const Vec& out_times, const Vec& edges, const KernelSpec& k) {
    if (edges.size() < 2 || edges[0] != 0.0) throw PreconditionError("cell edges must start at 0");
    const auto table = phi_table(k);
    const double g = gamma_fn(k.a() + 1.0);
    const Eigen::Index cells = edges.size() - 1;
    Mat M = Mat::Zero(out_times.size(), cells);
    for (Eigen::Index i = 0; i < out_times.size(); ++i) {
        const double t = out_times[i];
        for (Eigen::Index j = 0; j < cells && edges[j + 1] <= t; ++j)
            M(i, j) = cell_integral(*table, g, t, edges[j], edges[j + 1], k);
    }
    return M;
}

SampledPath apply_G(const SampledPath& f, const KernelSpec& k, GMode mode) {
    validate(f);
    if (f.times[0] != 0.0) throw PreconditionError("apply_G needs 0 as the first grid time");
    if (mode == GMode::Factorised) {
        const double c = 1.0 - k.H - k.J;
        SampledPath inner = pi_tilde(f, c);
        inner.left_origin = 0.0;
        return pi_tilde(riemann_liouville(inner, k.a()), -c);
    }
    const Eigen::Index n = f.size();
    const Mat M = kernel_cell_matrix(f.times.tail(n - 1), f.times, k);
    Vec slope(n - 1);
    for (Eigen::Index j = 0; j + 1 < n; ++j) slope[j] = (f.values[j + 1] - f.values[j]) / (f.times[j + 1] - f.times[j]);
    SampledPath out{f.times, Vec::Zero(n), f.left_origin};
    out.values.tail(n - 1) = M * slope;
    return out;
}

} // namespace fbmlab
