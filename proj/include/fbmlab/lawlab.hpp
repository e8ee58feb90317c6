#pragma once

#include <fbmlab/path.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fbmlab {

enum class Verdict { Equivalent, Singular, Undecided };
std::string_view to_string(Verdict v);

// Kakutani test for independent centred Gaussian sequences with variances sigma2 and sigma2_bar:
// the laws are equivalent iff sum (sigma2_bar / sigma2 - 1)^2 < inf.
struct KakutaniReport {
    Verdict verdict = Verdict::Undecided;
    double decay_exponent = 0.0;  // p in terms ~ n^-p, fitted over the upper three quarters
    double ci_half_width = 0.0;   // spread between fit windows plus three standard errors, >= 0.05
    double partial_sum = 0.0;     // S_N
    double tail_increment = 0.0;  // S_N - S_{3N/4}
    double sum_slope = 0.0;       // log-log slope of S_m against m over the upper three quarters
    std::vector<double> partial_sums;
};

KakutaniReport kakutani(std::span<const double> sigma2, std::span<const double> sigma2_bar);

// Perturbation test: sigma2_n = (a_n^J)^2 from the exact coefficients, sigma2_bar_n adds
// lambda^2 (pi n)^{-2H-1}. Analytically equivalent iff lambda = 0 or H - J > 1/4.
struct CheridReport {
    KakutaniReport numeric;
    Verdict analytic = Verdict::Undecided;
    bool agree = false;
};

CheridReport cherid_decide(double J, double H, double lambda, std::size_t N = 4096);

// T^{1-H} sup|D^1 x| + T^{2-H} sup|D^2 x| with divided differences; bounds |x| in the
// Cameron-Martin norm up to a unit constant.
double entropy_bound(const SampledPath& x, double H, double T);

double pinsker_tv(double entropy);

// (1 / |log t_min|) int_{t_min}^1 x(us) x(vs) s^{-2H-1} ds on the interpolant of x, which must
// cover [t_min min(u, v), max(u, v)].
double ergodic_cov(const SampledPath& x, double H, double u, double v, double t_min);

struct TableRow {
    std::string scenario;
    double parameter = 0.0;
    Verdict analytic = Verdict::Undecided;
    std::string diagnostic;  // empty when only the analytic verdict is available
    double value = 0.0;
    double expected = 0.0;
    bool consistent = true;
};

// Analytic verdicts for the comparison scenarios with numerical consistency evidence.
std::vector<TableRow> equivalence_table(double H, std::uint64_t seed, Eigen::Index M = 400);

} // namespace fbmlab
