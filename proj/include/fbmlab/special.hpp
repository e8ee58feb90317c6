#pragma once

#include <fbmlab/errors.hpp>

#include <array>
#include <cmath>
#include <numbers>

namespace fbmlab {

// sin(pi x) with exact zeros at the integers.
template <typename Scalar>
Scalar sin_pi(Scalar x) {
    const Scalar r = x - Scalar(2) * std::round(x / Scalar(2));  // r in [-1, 1]
    if (r == std::round(r)) return Scalar(0);
    return std::sin(std::numbers::pi_v<Scalar> * r);
}

// Lanczos (g = 7, 9 terms) with reflection below 1/2. Positive integers up to 170 are exact products.
template <typename Scalar>
Scalar gamma_fn(Scalar x) {
    using std::numbers::pi_v;
    if (std::isnan(x)) return x;
    if (x <= Scalar(0) && x == std::round(x)) throw DomainError("gamma_fn: pole at non-positive integer");
    if (x >= Scalar(1) && x <= Scalar(170) && x == std::round(x)) {
        Scalar f(1);
        for (int k = 2; k < static_cast<int>(x); ++k) f *= Scalar(k);
        return f;
    }
    if (x < Scalar(0.5)) return pi_v<Scalar> / (sin_pi(x) * gamma_fn(Scalar(1) - x));
    static constexpr std::array<double, 9> p{
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const Scalar z = x - Scalar(1);
    Scalar a = Scalar(p[0]);
    for (int i = 1; i < 9; ++i) a += Scalar(p[i]) / (z + Scalar(i));
    const Scalar t = z + Scalar(7.5);
    return std::sqrt(Scalar(2) * pi_v<Scalar>) * std::pow(t, z + Scalar(0.5)) * std::exp(-t) * a;
}

template <typename Scalar>
Scalar beta_fn(Scalar a, Scalar b) {
    return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b);
}

template <typename Scalar>
void require_hurst(Scalar H) {
    if (!(H > Scalar(0) && H < Scalar(1))) throw DomainError("Hurst index must lie in (0, 1)");
}

// kappa(H) = 1 / Gamma(H + 1/2).
template <typename Scalar>
Scalar kappa(Scalar H) {
    require_hurst(H);
    return Scalar(1) / gamma_fn(H + Scalar(0.5));
}

// rho(H) = kappa^2 (3/2 - H)/(2H) B(2 - 2H, H + 1/2); exactly 1 at H = 1/2.
template <typename Scalar>
Scalar rho(Scalar H) {
    require_hurst(H);
    const Scalar k = kappa(H);
    return k * k * (Scalar(1.5) - H) / (Scalar(2) * H) * beta_fn(Scalar(2) - Scalar(2) * H, H + Scalar(0.5));
}

// rho(H) = -2 cos(pi H) Gamma(-2H) / pi. Singular at H = 1/2, where the limit 1 is returned.
template <typename Scalar>
Scalar rho_reflection(Scalar H) {
    require_hurst(H);
    if (H == Scalar(0.5)) return Scalar(1);
    return -Scalar(2) * std::cos(std::numbers::pi_v<Scalar> * H) * gamma_fn(-Scalar(2) * H) /
           std::numbers::pi_v<Scalar>;
}

// Covariance of fBm with Var B_1 = rho(H).
template <typename Scalar>
Scalar fbm_cov(Scalar s, Scalar t, Scalar H, Scalar rho_h) {
    const Scalar e = Scalar(2) * H;
    return Scalar(0.5) * rho_h * (std::pow(std::abs(s), e) + std::pow(std::abs(t), e) - std::pow(std::abs(t - s), e));
}

struct SpectralResult {
    double value;
    double error_estimate;
};

// (1/(pi H)) int_0^inf s^{-2H} sin s ds, by half-period panels and an averaged alternating tail.
// For H > 1/2 the integrand is first rewritten as s^{1-2H} cos s / (2H - 1).
SpectralResult spectral_variance(double H, double tol = 1e-10);

} // namespace fbmlab
