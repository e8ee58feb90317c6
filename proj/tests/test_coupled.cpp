#include "catch_amalgamated.hpp"

#include <fbmlab/coupled.hpp>
#include <fbmlab/special.hpp>

#include <cmath>

using namespace fbmlab;

namespace {

Mat stack(const CoupledGenerator& g, Eigen::Index M, Vec CoupledSample::*field) {
    const CoupledSample first = g.sample(0);
    Mat out(M, (first.*field).size());
    for (Eigen::Index k = 0; k < M; ++k) out.row(k) = (g.sample(static_cast<std::uint64_t>(k)).*field).transpose();
    return out;
}

} // namespace

TEST_CASE("all four processes coincide for Brownian motion") {
    GeneratorConfig c;
    c.H = 0.5;
    c.n = 16;
    c.seed = 2;
    const CoupledSample s = coupled_gen(c);
    CHECK((s.B - s.X).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.Bhat - s.X).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.Bbar - s.X).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("coupled processes have their laws") {
    for (double H : {0.3, 0.7}) {
        GeneratorConfig c;
        c.H = H;
        c.n = 16;
        c.refine = 8;
        c.seed = 4;
        const CoupledGenerator g(c);
        const Mat target = fbm_covariance(g.times(), H);
        INFO("H=" << H);
        CHECK(covariance_zscore(stack(g, 4000, &CoupledSample::B), target).max_abs_z < 5.0);
        // the periodic versions follow their series laws, not fBm
        const Mat hat = series_covariance(GeneratorKind::BHat, g.times(), H, 1u << 20);
        const Mat bar = series_covariance(GeneratorKind::BBar, g.times(), H, 1u << 20);
        CHECK(covariance_zscore(stack(g, 4000, &CoupledSample::Bhat), hat).max_abs_z < 5.0);
        CHECK(covariance_zscore(stack(g, 4000, &CoupledSample::Bbar), bar).max_abs_z < 5.0);
    }
}

TEST_CASE("periodic versions stop at one") {
    GeneratorConfig c;
    c.H = 0.7;
    c.T = 3.0;
    c.n = 24;
    c.refine = 2;
    const CoupledGenerator g(c);
    CHECK(g.unit_count() == 8);
    const CoupledSample s = g.sample(1);
    CHECK(s.B.size() == 24);
    CHECK(s.Bhat.size() == 8);
}

TEST_CASE("increments of B - X decay with the start time") {
    GeneratorConfig c;
    c.H = 0.7;
    c.T = 9.0;
    c.n = 9 * 16;
    c.refine = 0;
    c.seed = 3;
    const CoupledGenerator g(c);
    double near = 0.0, far = 0.0;
    for (std::uint64_t k = 0; k < 400; ++k) {
        const CoupledSample s = g.sample(k);
        const Vec d = s.X - s.B;
        near += std::pow(d[31] - d[15], 2);
        far += std::pow(d[143] - d[127], 2);
    }
    // slope H - 1 over a factor 8 in start time
    CHECK(far < near);
    CHECK(std::sqrt(far / near) < std::pow(8.0, -0.1));
}
