#pragma once

// Reference values computed independently of the library with Boost.Math.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

namespace oracle {

// Var B_1 from the spectral form (1 / (pi H)) int_0^inf s^{-2H} sin s ds.
inline double spectral_rho(double H) {
    if (H < 0.5) {
        boost::math::quadrature::ooura_fourier_sin<double> ooura;
        const auto [v, err] = ooura.integrate([H](double s) { return std::pow(s, -2.0 * H); }, 1.0);
        return v / (std::numbers::pi * H);
    }
    // Split at 1: the head by tanh-sinh (integrable singularity), the tail by Ooura on s + 1.
    boost::math::quadrature::tanh_sinh<double> ts;
    const double head = ts.integrate([H](double s) { return std::pow(s, 1.0 - 2.0 * H) * (s > 0.0 ? std::sin(s) / s : 1.0); }, 0.0, 1.0);
    boost::math::quadrature::ooura_fourier_sin<double> os;
    boost::math::quadrature::ooura_fourier_cos<double> oc;
    const auto g = [H](double x) { return std::pow(x + 1.0, -2.0 * H); };
    const double tail = std::cos(1.0) * os.integrate(g, 1.0).first + std::sin(1.0) * oc.integrate(g, 1.0).first;
    return (head + tail) / (std::numbers::pi * H);
}

// The fBm variance normalisation through Gamma functions only.
inline double gamma_rho(double H) {
    if (H == 0.5) return 1.0;
    return -2.0 * std::cos(std::numbers::pi * H) * boost::math::tgamma(-2.0 * H) / std::numbers::pi;
}

// phi^{J,H}(u) = (H-J) int_1^u (v^{H+J-1} - 1)(v - 1)^{H-J-1} dv + (u - 1)^{H-J}.
inline double phi(double J, double H, double u) {
    const double a = H - J, b = H + J - 1.0;
    boost::math::quadrature::tanh_sinh<double> ts;
    // v = 1 + w with (v^b - 1) / w kept accurate near w = 0
    const auto g = [=](double w) { return (w > 0.0 ? std::expm1(b * std::log1p(w)) / w : b) * std::pow(w, a); };
    const double I = ts.integrate(g, 0.0, u - 1.0);
    return a * I + std::pow(u - 1.0, a);
}

} // namespace oracle
