#include "catch_amalgamated.hpp"

#include <fbmlab/errors.hpp>
#include <fbmlab/lawlab.hpp>
#include <fbmlab/special.hpp>

#include <cmath>
#include <vector>

using namespace fbmlab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::vector<double> powers(std::size_t N, double p, double scale = 1.0) {
    std::vector<double> v(N);
    for (std::size_t n = 1; n <= N; ++n) v[n - 1] = scale * std::pow(static_cast<double>(n), -p);
    return v;
}

const TableRow& row(const std::vector<TableRow>& rows, const std::string& name, double param) {
    for (const TableRow& r : rows) {
        if (r.scenario == name && r.parameter == param) return r;
    }
    throw std::out_of_range(name);
}

} // namespace

TEST_CASE("Kakutani on identical and scaled sequences") {
    const auto s = powers(1000, 1.6);
    CHECK(kakutani(s, s).verdict == Verdict::Equivalent);
    CHECK(kakutani(s, s).partial_sum == 0.0);
    CHECK(kakutani(s, powers(1000, 1.6, 2.0)).verdict == Verdict::Singular);
}

TEST_CASE("Kakutani on power-law perturbations") {
    const std::size_t N = 4096;
    const auto s = powers(N, 1.0);
    for (auto [q, expected] : {std::pair{0.8, Verdict::Equivalent}, {0.3, Verdict::Singular}, {1.5, Verdict::Equivalent}}) {
        // ratio - 1 = n^{-q}: terms decay like n^{-2q}
        std::vector<double> sb(N);
        for (std::size_t n = 1; n <= N; ++n) sb[n - 1] = s[n - 1] * (1.0 + std::pow(static_cast<double>(n), -q));
        const KakutaniReport r = kakutani(s, sb);
        INFO("q=" << q);
        CHECK(r.verdict == expected);
        CHECK_THAT(r.decay_exponent, WithinAbs(2 * q, 0.05));
        // swapping the sequences keeps equivalent and singular apart
        const Verdict back = kakutani(sb, s).verdict;
        CHECK(back == expected);
    }
}

TEST_CASE("Kakutani input checks") {
    const auto s = powers(100, 1.0);
    CHECK_THROWS_AS(kakutani(s, powers(99, 1.0)), PreconditionError);
    CHECK_THROWS_AS(kakutani(powers(10, 1.0), powers(10, 1.0)), PreconditionError);
    auto bad = s;
    bad[5] = 0.0;
    CHECK_THROWS_AS(kakutani(bad, s), DomainError);
}

TEST_CASE("perturbation threshold") {
    CHECK(cherid_decide(0.3, 0.6, 1.0).numeric.verdict == Verdict::Equivalent);
    CHECK(cherid_decide(0.3, 0.45, 1.0).numeric.verdict == Verdict::Singular);
    CHECK(cherid_decide(0.3, 0.45, 0.0).numeric.verdict == Verdict::Equivalent);
    for (double J : {0.1, 0.3, 0.5}) {
        for (double d = -0.3; d <= 0.6; d += 0.1) {
            const double H = J + 0.25 + d;
            if (H <= 0.0 || H >= 1.0 || std::abs(d) < 0.05) continue;
            const CheridReport r = cherid_decide(J, H, 1.0, 2048);
            INFO("J=" << J << " H=" << H);
            CHECK(r.agree);
        }
    }
}

TEST_CASE("Pinsker bound") {
    CHECK(pinsker_tv(0.0) == 0.0);
    double prev = 0.0;
    for (double e = 1e-4; e < 10; e *= 1.7) {
        CHECK(pinsker_tv(e) > prev);
        prev = pinsker_tv(e);
    }
    CHECK_THROWS_AS(pinsker_tv(-1.0), DomainError);
}

TEST_CASE("entropy bound scaling") {
    const SampledPath x = sample([](double t) { return std::sin(3.0 * t) + t * t; }, uniform_grid(101, 0.0, 1.0));
    SampledPath y = x;
    y.values *= -2.5;
    CHECK_THAT(entropy_bound(y, 0.3, 1.0), WithinRel(2.5 * entropy_bound(x, 0.3, 1.0), 1e-14));
    // a straight line has no second derivative
    const SampledPath line = sample([](double t) { return 2.0 * t; }, uniform_grid(11, 0.0, 4.0));
    CHECK_THAT(entropy_bound(line, 0.5, 4.0), WithinRel(2.0 * std::pow(4.0, 0.5), 1e-12));
}

TEST_CASE("ergodic estimator on the eigenfunction") {
    const double H = 0.7;
    const SampledPath x = sample([H](double t) { return std::pow(t, H); }, log_grid(4000, 1e-7, 1.0));
    for (double tm : {1e-3, 1e-4, 1e-6}) {
        CHECK_THAT(ergodic_cov(x, H, 0.5, 1.0, tm), WithinAbs(std::pow(0.5, H), 1e-6));
        CHECK_THAT(ergodic_cov(x, H, 1.0, 1.0, tm), WithinAbs(1.0, 1e-6));
    }
    CHECK_THROWS_AS(ergodic_cov(x, H, 0.5, 1.0, 1e-8), DomainError);
    CHECK_THROWS_AS(ergodic_cov(x, H, 0.5, 2.0, 1e-3), DomainError);
}

TEST_CASE("equivalence table") {
    const auto rows7 = equivalence_table(0.7, 11, 400);
    CHECK(row(rows7, "rl_vs_fbm", 0.0).analytic == Verdict::Singular);
    CHECK(row(rows7, "rl_vs_fbm", 1.0).analytic == Verdict::Equivalent);
    CHECK(row(rows7, "bhat_vs_fbm", 1.0).analytic == Verdict::Singular);
    CHECK(row(rows7, "bhat_vs_fbm", 1.0).diagnostic.empty());
    const TableRow& small = row(rows7, "small_time", 0.5);
    CHECK_THAT(small.value, WithinAbs(0.3, 0.1));
    const auto rows3 = equivalence_table(0.3, 11, 200);
    CHECK(row(rows3, "bhat_vs_fbm", 0.5).analytic == Verdict::Equivalent);
    CHECK(row(rows3, "bhat_vs_fbm", 0.5).consistent);
    CHECK(row(equivalence_table(0.5, 11, 50), "rl_vs_fbm", 0.0).analytic == Verdict::Equivalent);
}
