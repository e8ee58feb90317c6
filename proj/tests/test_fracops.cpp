#include "catch_amalgamated.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <fbmlab/errors.hpp>
#include <fbmlab/fracops.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace fbmlab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double sup_diff(const SampledPath& a, const Vec& b) { return (a.values - b).cwiseAbs().maxCoeff(); }

double bump(double t) { return std::abs(t) < 1.0 ? t * std::exp(-1.0 / (1.0 - t * t)) : 0.0; }

} // namespace

TEST_CASE("Riemann-Liouville on linear functions is exact") {
    const SampledPath f = sample([](double t) { return t; }, uniform_grid(65, 0.0, 1.0));
    for (double a : {0.3, 0.7, 1.0}) {
        const Vec ref = f.times.array().pow(1.0 + a) / boost::math::tgamma(2.0 + a);
        CHECK(sup_diff(riemann_liouville(f, a), ref) < 1e-13);
    }
    // derivative side: I^{-a} t = t^{1-a} / Gamma(2-a)
    const Vec ref = f.times.array().pow(0.6) / boost::math::tgamma(1.6);
    CHECK(sup_diff(riemann_liouville(f, -0.4), ref) < 1e-13);
}

TEST_CASE("boundary value contributes the power term") {
    SampledPath f = sample([](double) { return 1.0; }, uniform_grid(33, 1.0, 2.0), 1.0);
    const SampledPath g = riemann_liouville(f, 0.5);
    for (Eigen::Index i = 0; i < g.size(); ++i)
        CHECK_THAT(g.values[i], WithinAbs(std::sqrt(g.times[i] - 1.0) / boost::math::tgamma(1.5), 1e-14));
    CHECK_THROWS_AS(riemann_liouville(f, -0.5), PreconditionError);
}

TEST_CASE("semigroup defect shrinks with the grid") {
    double prev = 1.0;
    for (int n : {256, 512, 1024}) {
        const SampledPath f = sample([](double t) { return std::sin(4.0 * t); }, uniform_grid(n + 1, 0.0, 1.0));
        const double d = (riemann_liouville(riemann_liouville(f, 0.4), 0.3).values - riemann_liouville(f, 0.7).values).cwiseAbs().maxCoeff();
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("order range") {
    const SampledPath f = sample([](double t) { return t; }, uniform_grid(9, 0.0, 1.0));
    CHECK_THROWS_AS(riemann_liouville(f, -1.0), DomainError);
    CHECK_THROWS_AS(riemann_liouville(f, 1.5), DomainError);
    CHECK(sup_diff(riemann_liouville(f, 0.0), f.values) == 0.0);
}

TEST_CASE("two-sided operator inverts on a bump") {
    const SampledPath f = sample(bump, uniform_grid(2001, -2.0, 2.0));
    for (double a : {0.3, -0.3}) {
        CHECK(sup_diff(itilde(itilde(f, a, Side::Plus), -a, Side::Plus), f.values) < 1e-3);
        CHECK(sup_diff(itilde(itilde(f, a, Side::Minus), -a, Side::Minus), f.values) < 1e-3);
    }
}

TEST_CASE("two-sided operator needs the origin on the grid") {
    const SampledPath f = sample(bump, uniform_grid(10, -2.0, 2.0));
    CHECK_THROWS_AS(itilde(f, 0.3, Side::Plus), PreconditionError);
}

TEST_CASE("trigonometric eigenrelation") {
    const double r = 2.0 * std::numbers::pi, A = 40.25;
    std::vector<double> ts;
    const int nc = static_cast<int>((A - 2.0) / 2e-3);
    for (int i = 0; i < nc; ++i) ts.push_back(-A + i * (A - 2.0) / nc);
    for (int i = 0; i <= 3000; ++i) ts.push_back(-2.0 + 3.0 * i / 3000.0);
    const Vec T = Eigen::Map<Vec>(ts.data(), static_cast<Eigen::Index>(ts.size()));
    const SampledPath f = sample([r](double t) { return 1.0 - std::cos(r * t); }, T);
    const double a = 0.2, ph = a * std::numbers::pi / 2.0;
    const SampledPath g = itilde(f, a, Side::Plus, {0.0, 1.0});
    REQUIRE(g.times[0] == 0.0);
    double err = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i)
        err = std::max(err, std::abs(g.values[i] - std::pow(r, -a) * (std::cos(ph) - std::cos(r * g.times[i] - ph))));
    CHECK(err < 2e-4);
}

TEST_CASE("weights and weighted integrals") {
    const SampledPath f = sample([](double t) { return t; }, uniform_grid(129, 0.0, 2.0));
    const SampledPath p = pi_mult(f, 0.5);
    CHECK_THAT(p.values[128], WithinRel(std::pow(2.0, 1.5), 1e-15));
    // int_0^t s^a ds on the identity
    const SampledPath q = pi_tilde(f, 0.5);
    for (Eigen::Index i = 0; i < q.size(); i += 16) CHECK_THAT(q.values[i], WithinAbs(std::pow(q.times[i], 1.5) / 1.5, 1e-13));
}

TEST_CASE("time inversion") {
    const double a = 0.7, k = 0.5;
    const SampledPath f = sample([k](double t) { return std::pow(t, k); }, log_grid(2000, 1e-2, 1e7));
    const SampledPath t = time_invert(f, a, Inversion::T);
    // T t^k = t^{2a - k}
    for (Eigen::Index i = 0; i < t.size(); i += 50) CHECK_THAT(t.values[i], WithinRel(std::pow(t.times[i], 2 * a - k), 1e-12));
    // T is an involution on grid values
    const SampledPath tt = time_invert(t, a, Inversion::T);
    CHECK((tt.values - f.values).cwiseAbs().maxCoeff() < 1e-12 * f.values.cwiseAbs().maxCoeff());
    // T' t^k = -k / (2a - k) t^{2a - k}, up to the tail cut at the last grid time
    const SampledPath tp = time_invert(f, a, Inversion::TPrime);
    for (Eigen::Index i = 0; i < tp.size(); ++i) {
        if (tp.times[i] < 0.1 || tp.times[i] > 10.0) continue;
        CHECK_THAT(tp.values[i], WithinRel(-k / (2 * a - k) * std::pow(tp.times[i], 2 * a - k), 1e-3));
    }
}

TEST_CASE("t_hl annihilates its kernel function") {
    const SampledPath f = sample([](double t) { return std::pow(t, 1.7); }, uniform_grid(4097, 0.0, 1.0));
    CHECK(t_hl(f, 0.7, 1.0).values.cwiseAbs().maxCoeff() < 1e-5);
    // a rougher kernel function converges more slowly near the origin
    const double H = 0.3, L = 0.5;
    const SampledPath r = sample([&](double t) { return std::pow(t, H + L); }, uniform_grid(4097, 0.0, 1.0));
    CHECK(t_hl(r, H, L).values.cwiseAbs().maxCoeff() < 1e-3);
    // on t^a the map is multiplication by (a - L - H) / (a + L - H)
    const SampledPath g = sample([](double t) { return t * t; }, uniform_grid(4097, 0.0, 1.0));
    const double m = (2.0 - L - H) / (2.0 + L - H);
    CHECK_THAT(t_hl(g, H, L).values[4096], WithinAbs(m, 1e-6));
}

TEST_CASE("Hoelder seminorm of a line") {
    const SampledPath f = sample([](double t) { return 3.0 * t; }, uniform_grid(257, 0.0, 4.0));
    CHECK_THAT(holder_seminorm(f, {1.0, 0.0, 0.0}), WithinRel(3.0, 1e-12));
}
