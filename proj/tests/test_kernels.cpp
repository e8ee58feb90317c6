#include "catch_amalgamated.hpp"
#include "oracles.hpp"

#include <fbmlab/errors.hpp>
#include <fbmlab/kernels.hpp>
#include <fbmlab/special.hpp>

#include <cmath>

using namespace fbmlab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("phi is one on the diagonal") {
    for (double h : {0.1, 0.5, 0.9}) {
        for (double u : {1.001, 2.0, 1e4}) CHECK(phi_JH(u, KernelSpec(h, h)) == 1.0);
    }
}

TEST_CASE("phi on the anti-diagonal is a power") {
    for (double J : {0.2, 0.4, 0.7}) {
        for (double u : {1.5, 2.0, 10.0}) CHECK_THAT(phi_JH(u, KernelSpec(J, 1.0 - J)), WithinAbs(std::pow(u - 1.0, 1.0 - 2.0 * J), 1e-9));
    }
}

TEST_CASE("phi against tanh-sinh") {
    for (auto [J, H] : {std::pair{0.3, 0.6}, {0.6, 0.4}, {0.2, 0.8}, {0.7, 0.2}}) {
        const KernelSpec k(J, H);
        for (double u : {1.05, 1.7, 4.0, 30.0}) CHECK_THAT(phi_JH(u, k), WithinRel(oracle::phi(J, H, u), 1e-9));
    }
}

TEST_CASE("derivative and table") {
    const KernelSpec k(0.3, 0.6);
    const double u = 3.0, h = 1e-5;
    CHECK_THAT((phi_JH(u + h, k) - phi_JH(u - h, k)) / (2 * h), WithinRel(phi_prime(u, k), 1e-8));
    const auto tab = phi_table(k);
    CHECK(tab == phi_table(k));
    for (double x = -1.3; x < 13.0; x += 0.173) {
        const double w = std::exp(x);
        const double d = phi_of_w(w, k);
        CHECK(std::abs((*tab)(w) - d) <= 1e-10 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("kernel cell integrals") {
    // J = H: K(t, s) = 1 / Gamma(1) so the cell integral is the cell length.
    CHECK_THAT(kernel_cell_integral(1.0, 0.25, 0.5, KernelSpec(0.4, 0.4)), WithinAbs(0.25, 1e-14));
    // anti-diagonal: K = (t - s)^{1-2J} / Gamma(2 - 2J)
    const double J = 0.3, t = 1.0;
    const double ref = (1.0 - std::pow(0.4, 2 - 2 * J)) / (2 - 2 * J) / boost::math::tgamma(2 - 2 * J);
    CHECK_THAT(kernel_cell_integral(t, 0.0, 0.6, KernelSpec(J, 1 - J)), WithinRel(ref, 1e-9));
}

TEST_CASE("composition and inversion of G") {
    const SampledPath f = sample([](double t) { return std::sin(3.0 * t) + t * t; }, uniform_grid(1025, 0.0, 1.0));
    const SampledPath a = apply_G(apply_G(f, KernelSpec(0.3, 0.6)), KernelSpec(0.6, 0.4));
    CHECK((a.values - apply_G(f, KernelSpec(0.3, 0.4)).values).cwiseAbs().maxCoeff() < 1e-3);
    const SampledPath id = apply_G(apply_G(f, KernelSpec(0.3, 0.6)), KernelSpec(0.6, 0.3));
    CHECK((id.values - f.values).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("factorised and direct modes agree") {
    const SampledPath f = sample([](double t) { return t * (1.0 - 0.5 * t); }, uniform_grid(257, 0.0, 1.0));
    const KernelSpec k(0.35, 0.65);
    CHECK((apply_G(f, k).values - apply_G(f, k, GMode::Direct).values).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("kernel spec domain") {
    CHECK_THROWS_AS(KernelSpec(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(KernelSpec(0.5, 1.0), DomainError);
    CHECK_THAT(Kplus(-1.0, -2.0, KernelSpec(0.5, 0.5)), WithinRel(std::pow(2.0, -1.0), 1e-14));
}
