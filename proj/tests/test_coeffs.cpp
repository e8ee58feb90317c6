#include "catch_amalgamated.hpp"

#include <fbmlab/coeffs.hpp>
#include <fbmlab/errors.hpp>
#include <fbmlab/special.hpp>

#include <cmath>
#include <numbers>

using namespace fbmlab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("Brownian coefficients") {
    const CoeffTable t = coeff_table(0.5, std::sqrt(0.5), 1024);
    for (std::size_t n = 1; n <= 1024; ++n) {
        CHECK_THAT(t.a(n), WithinAbs(1.0 / (pi * static_cast<double>(n)), 1e-10));
        CHECK_THAT(t.b[n - 1], WithinRel(1.0 / (pi * pi * static_cast<double>(n * n)), 1e-12));
    }
    CHECK(default_a0(0.5) == std::sqrt(0.5));
}

TEST_CASE("variance identity") {
    // a0^2 t^2 + 2 sum b_n (1 - cos(pi n t)) = rho t^{2H}, up to the tail beyond N
    const std::size_t N = 1u << 14;
    for (double H : {0.3, 0.7}) {
        const double a0 = default_a0(H);
        const CoeffTable tab = coeff_table(H, a0, N);
        const double tail = 4.0 * std::pow(pi, -2 * H - 1) * std::pow(static_cast<double>(N), -2 * H) / (2 * H);
        for (double t : {0.25, 0.5, 1.0}) {
            double v = a0 * a0 * t * t;
            for (std::size_t n = 1; n <= N; ++n) v += 2.0 * tab.b[n - 1] * (1.0 - std::cos(pi * static_cast<double>(n) * t));
            CHECK_THAT(v, WithinAbs(rho(H) * std::pow(t, 2 * H), tail));
        }
    }
}

TEST_CASE("covariance identity off the diagonal") {
    const std::size_t N = 1u << 14;
    const double H = 0.7, a0 = default_a0(H), s = 0.3, t = 0.8;
    const CoeffTable tab = coeff_table(H, a0, N);
    double c = a0 * a0 * s * t;
    for (std::size_t n = 1; n <= N; ++n) {
        const double x = pi * static_cast<double>(n);
        c += tab.b[n - 1] * ((std::cos(x * s) - 1) * (std::cos(x * t) - 1) + std::sin(x * s) * std::sin(x * t));
    }
    CHECK_THAT(c, WithinAbs(fbm_cov(s, t, H, rho(H)), 1e-4));
}

TEST_CASE("the two representations agree above one half") {
    for (double H : {0.55, 0.6, 0.8}) {
        for (std::size_t n : {1u, 2u, 10u, 40u, 500u})
            CHECK_THAT(b_n_integrated_form(H, 0.3, n), WithinAbs(b_n_cosine_form(H, 0.3, n), 1e-8 * std::max(1e-8, std::abs(b_n_cosine_form(H, 0.3, n))) + 1e-14));
    }
}

TEST_CASE("feasibility above one half forces the drift") {
    CHECK(check_feasibility(0.7, default_a0(0.7), 1024).feasible);
    const Feasibility f = check_feasibility(0.7, 0.5 * default_a0(0.7), 1024);
    CHECK_FALSE(f.feasible);
    CHECK(f.first_negative >= 1);
    CHECK_THROWS_AS(coeff_table(0.7, 0.5 * default_a0(0.7), 64), CoefficientError);
}

TEST_CASE("feasibility boundary below one half") {
    const double H = 0.3;
    const Boundary b = feasibility_boundary(H);
    CHECK(b.a > default_a0(H));
    CHECK(check_feasibility(H, b.a * (1 - 1e-9), 4096).feasible);
    const Feasibility over = check_feasibility(H, b.a * (1 + 1e-6), 4096);
    CHECK_FALSE(over.feasible);
    CHECK(over.first_negative == b.argmin);
    try {
        coeff_table(H, b.a * 1.01, 4096);
        FAIL("expected a coefficient error");
    } catch (const CoefficientError& e) {
        CHECK(e.first_bad_n() == b.argmin);
    }
}

TEST_CASE("asymptotic rate") {
    for (double H : {0.3, 0.7}) {
        const AsymptoticFit f = asymptotic_check(coeff_table(H, default_a0(H), 1024));
        CHECK_THAT(f.slope, WithinAbs(2 * H - 3, 0.3));
        CHECK(f.pass);
    }
    CHECK(asymptotic_check(coeff_table(0.5, default_a0(0.5), 1024)).exact);
}
