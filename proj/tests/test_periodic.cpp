#include "catch_amalgamated.hpp"

#include <fbmlab/errors.hpp>
#include <fbmlab/periodic.hpp>

#include <cmath>
#include <numbers>

using namespace fbmlab;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("single modes rotate and scale") {
    TrigSeries s;
    s.kind = Periodic::Hat;
    s.c = {0.0, 1.0};
    s.s = {0.0, 0.0};
    const double a = 0.3;
    const TrigSeries g = periodic_frac(s, a);
    const double r = s.frequency(1);
    CHECK_THAT(r, WithinAbs(4.0 * pi, 1e-15));
    CHECK_THAT(g.c[1], WithinAbs(std::pow(r, -a) * std::cos(a * pi / 2), 1e-15));
    CHECK_THAT(g.s[1], WithinAbs(std::pow(r, -a) * std::sin(a * pi / 2), 1e-15));
    const TrigSeries back = periodic_frac(g, -a);
    CHECK_THAT(back.c[1], WithinAbs(1.0, 1e-14));
    CHECK_THAT(back.s[1], WithinAbs(0.0, 1e-14));
}

TEST_CASE("bar frequencies are odd multiples of pi") {
    TrigSeries s;
    s.kind = Periodic::Bar;
    CHECK_THAT(s.frequency(0), WithinAbs(pi, 1e-15));
    CHECK_THAT(s.frequency(2), WithinAbs(5.0 * pi, 1e-15));
}

TEST_CASE("trigonometric fit reproduces samples") {
    const SampledPath f = sample([](double t) { return t * t * (1.5 - t) + 0.2 * std::sin(6.0 * t); }, uniform_grid(257, 0.0, 1.0));
    for (Periodic k : {Periodic::Hat, Periodic::Bar}) {
        const TrigSeries s = fit_trig_series(f, k);
        double err = 0.0;
        for (Eigen::Index i = 0; i < f.size(); ++i) err = std::max(err, std::abs(s(f.times[i]) - f.values[i]));
        CHECK(err < 1e-12);
    }
}

TEST_CASE("periodic operators invert each other") {
    const SampledPath f = sample([](double t) { return std::sin(2 * pi * t) + 0.5 * (1.0 - std::cos(6 * pi * t)); }, uniform_grid(129, 0.0, 1.0));
    CHECK((ihat(ihat(f, 0.4), -0.4).values - f.values).cwiseAbs().maxCoeff() < 1e-12);
    const SampledPath g = sample([](double t) { return std::sin(pi * t) + (1.0 - std::cos(3 * pi * t)); }, uniform_grid(129, 0.0, 1.0));
    CHECK((ibar(ibar(g, 0.25), -0.25).values - g.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("grid requirements") {
    const SampledPath off = sample([](double t) { return t + 1.0; }, uniform_grid(17, 0.0, 1.0));
    CHECK_THROWS_AS(ihat(off, 0.2), PreconditionError);
    const SampledPath wide = sample([](double t) { return t; }, uniform_grid(17, 0.0, 2.0));
    CHECK_THROWS_AS(ibar(wide, 0.2), PreconditionError);
    TrigSeries s;
    CHECK_THROWS_AS(periodic_frac(s, 1.0), DomainError);
}
