#include <fbmlab/special.hpp>

#include <fbmlab/quadrature.hpp>

#include <numbers>
#include <vector>

namespace fbmlab {

namespace {

constexpr double pi = std::numbers::pi;

// Partial sums of int_start^inf g over consecutive half periods [start + k pi, start + (k+1) pi].
std::vector<double> half_period_sums(auto&& g, double start, double head, int panels) {
    std::vector<double> sums;
    sums.reserve(panels);
    double acc = head;
    for (int k = 0; k < panels; ++k) {
        const double lo = start + k * pi;
        acc += quad::legendre(g, lo, lo + pi, 24);
        sums.push_back(acc);
    }
    return sums;
}

} // namespace

SpectralResult spectral_variance(double H, double tol) {
    require_hurst(H);
    constexpr int panels = 64;
    constexpr int tail = 24;
    std::vector<double> sums;
    double scale = 1.0;
    if (H <= 0.5) {
        // s^{-2H} sin s = s^{1-2H} * (sin s / s) on the first half period.
        const double a = 1.0 - 2.0 * H;
        const double head = quad::jacobi_left([](double s) { return std::sin(s) / s; }, 0.0, pi, a, 40);
        sums = half_period_sums([H](double s) { return std::pow(s, -2.0 * H) * std::sin(s); }, pi, head, panels);
    } else {
        const double a = 1.0 - 2.0 * H;
        const double head = quad::jacobi_left([](double s) { return std::cos(s); }, 0.0, 0.5 * pi, a, 40);
        sums = half_period_sums([a](double s) { return std::pow(s, a) * std::cos(s); }, 0.5 * pi, head, panels);
        scale = 1.0 / (2.0 * H - 1.0);
    }
    const std::span<const double> all(sums);
    const double limit = quad::averaged_limit(all.last(tail));
    const double coarse = quad::averaged_limit(all.first(panels - 8).last(tail - 8));
    const double err = std::abs(limit - coarse);
    SpectralResult r{scale * limit / (pi * H), std::abs(scale) * err / (pi * H)};
    if (!(r.error_estimate <= tol * std::max(1.0, std::abs(r.value)))) {
        throw NumericError("spectral_variance: tail estimate above tolerance");
    }
    return r;
}

} // namespace fbmlab
