#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <fbmlab/errors.hpp>
#include <fbmlab/special.hpp>

using namespace fbmlab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("normalisation at the Brownian index") {
    REQUIRE(rho(0.5) == 1.0);
    REQUIRE(rho_reflection(0.5) == 1.0);
    REQUIRE(kappa(0.5) == 1.0);
}

TEST_CASE("gamma matches Boost") {
    for (double x = -4.75; x < 30.0; x += 0.37) {
        CHECK_THAT(gamma_fn(x), WithinRel(boost::math::tgamma(x), 1e-13));
    }
    for (int k = 1; k <= 20; ++k) CHECK(gamma_fn(static_cast<double>(k)) == boost::math::tgamma(static_cast<double>(k)));
    CHECK_THAT(beta_fn(0.3, 1.7), WithinRel(boost::math::beta(0.3, 1.7), 1e-13));
    CHECK_THROWS_AS(gamma_fn(-2.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
}

TEST_CASE("sin_pi has exact zeros") {
    for (int k = -5; k <= 5; ++k) CHECK(sin_pi(static_cast<double>(k)) == 0.0);
    CHECK_THAT(sin_pi(0.5), WithinAbs(1.0, 1e-16));
    CHECK_THAT(sin_pi(-1.5), WithinAbs(1.0, 1e-15));
}

TEST_CASE("rho forms agree with the Gamma oracle") {
    for (int k = 1; k <= 19; ++k) {
        const double H = k / 20.0;
        CHECK_THAT(rho(H), WithinRel(oracle::gamma_rho(H), 1e-12));
        CHECK_THAT(rho(H) - rho_reflection(H), WithinAbs(0.0, 1e-10));
    }
}

TEST_CASE("spectral variance equals rho") {
    for (int k = 1; k <= 9; ++k) {
        const double H = k / 10.0;
        const SpectralResult s = spectral_variance(H);
        CHECK_THAT(s.value, WithinAbs(rho(H), 1e-9));
        CHECK(s.error_estimate < 1e-10);
        CHECK_THAT(oracle::spectral_rho(H), WithinRel(s.value, 1e-6));
    }
}

TEST_CASE("covariance function") {
    const double H = 0.3, r = rho(H);
    CHECK_THAT(fbm_cov(2.0, 2.0, H, r), WithinRel(r * std::pow(2.0, 2 * H), 1e-15));
    CHECK(fbm_cov(0.4, 1.3, H, r) == fbm_cov(1.3, 0.4, H, r));
    CHECK(fbm_cov(0.0, 1.0, H, r) == 0.0);
    // Brownian motion: min(s, t)
    CHECK_THAT(fbm_cov(0.4, 1.3, 0.5, 1.0), WithinAbs(0.4, 1e-15));
}

TEST_CASE("Hurst domain") {
    CHECK_THROWS_AS(rho(0.0), DomainError);
    CHECK_THROWS_AS(rho(1.0), DomainError);
    CHECK_THROWS_AS(kappa(-0.1), DomainError);
    CHECK_THROWS_AS(spectral_variance(1.2), DomainError);
}
