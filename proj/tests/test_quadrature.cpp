#include "catch_amalgamated.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <fbmlab/quadrature.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace fbmlab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Gauss-Jacobi is exact on weighted polynomials") {
    for (double a : {-0.7, -0.2, 0.0, 0.4, 1.5}) {
        const quad::Rule& r = quad::gauss_jacobi(8, a);
        for (int p = 0; p < 16; ++p) {
            double acc = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * std::pow(r.nodes[i], p);
            CHECK_THAT(acc, WithinRel(1.0 / (a + p + 1.0), 1e-13));
        }
    }
}

TEST_CASE("cached rules are shared") {
    CHECK(&quad::gauss_jacobi(12, 0.25) == &quad::gauss_jacobi(12, 0.25));
}

TEST_CASE("end singularities against tanh-sinh") {
    boost::math::quadrature::tanh_sinh<double> ts;
    const auto f = [](double x) { return std::pow(x, -0.6) * std::pow(2.0 - x, 0.3) * std::cos(x); };
    const double ref = ts.integrate(f, 0.0, 2.0);
    CHECK_THAT(quad::graded(f, 0.0, 2.0, -0.6, 0.3), WithinRel(ref, 1e-8));
    CHECK_THAT(quad::jacobi_left([](double x) { return std::pow(2.0 - x, 0.3) * std::cos(x); }, 0.0, 2.0, -0.6, 40), WithinRel(ref, 1e-5));
    const auto g = [](double x) { return std::pow(3.0 - x, -0.45) * std::exp(x); };
    CHECK_THAT(quad::graded(g, 1.0, 3.0, std::nan(""), -0.45), WithinRel(ts.integrate(g, 1.0, 3.0), 1e-8));
}

TEST_CASE("averaged limit of an alternating series") {
    std::vector<double> sums;
    double s = 0.0;
    for (int k = 1; k <= 30; ++k) {
        s += (k % 2 ? 1.0 : -1.0) / k;
        sums.push_back(s);
    }
    double err = 0.0;
    CHECK_THAT(quad::averaged_limit(sums, &err), WithinAbs(std::numbers::ln2, 1e-10));
}
