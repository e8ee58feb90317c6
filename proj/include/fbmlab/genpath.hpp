#pragma once

#include <fbmlab/path.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fbmlab {

enum class GeneratorKind { Cholesky, MvN, MG, RL, BHat, BBar, ExactTrig, KL, StationaryA };

std::string_view to_string(GeneratorKind k);
GeneratorKind parse_generator(std::string_view id);  // accepts the ids and the CLI aliases

struct GeneratorConfig {
    double H = 0.5;
    Eigen::Index n = 64;  // output points t_k = k T / n, k = 1..n
    double T = 1.0;
    Eigen::Index M = 1;
    std::uint64_t seed = 0;
    std::size_t n_terms = 1u << 16;  // series generators
    double trunc_factor = 100.0;     // past horizon of the Mandelbrot-van Ness integral, in units of T
    int refine = 10;                 // graded levels of the driving-noise cells toward each grid point
    std::optional<double> a0;        // exact_trig; defaults to sqrt(rho H)
    Vec times;                       // explicit positive output grid; overrides n and T when set

    // Throws PreconditionError / DomainError on n < 2, n_terms < 1, trunc_factor < 10, bad H or grid.
    void validate(GeneratorKind kind) const;
    [[nodiscard]] Vec output_times() const;
};

struct Ensemble {
    Vec times;  // output grid, 0 excluded
    Mat paths;  // M x n
    Vec aux;    // stationary_A: A_0 for every path; empty otherwise
    double jitter = 0.0;            // diagonal shift added after a failed Cholesky
    double truncation_bias = 0.0;   // variance bound of the omitted part at the horizon
    Eigen::Index driver_dim = 0;    // normals drawn per path

    // Path k with the origin prepended.
    [[nodiscard]] SampledPath path(Eigen::Index k) const;
};

Ensemble simulate(GeneratorKind kind, const GeneratorConfig& cfg);

Ensemble gen_cholesky(const GeneratorConfig& cfg);
Ensemble gen_mvn(const GeneratorConfig& cfg);
Ensemble gen_mg(const GeneratorConfig& cfg);
Ensemble gen_rl(const GeneratorConfig& cfg);
Ensemble gen_series(GeneratorKind kind, const GeneratorConfig& cfg);
Ensemble gen_stationary(const GeneratorConfig& cfg);

// rho/2 (|s|^{2H} + |t|^{2H} - |t-s|^{2H}) on a grid.
Mat fbm_covariance(const Vec& times, double H);

// Covariance of a series generator truncated at n_terms, summed term by term.
Mat series_covariance(GeneratorKind kind, const Vec& times, double H, std::size_t n_terms,
                      std::optional<double> a0 = std::nullopt);

// Var X_t = t^{2H} / (2H Gamma(H + 1/2)^2) for the Riemann-Liouville process.
double rl_variance(double t, double H);

// Sample second moments against a target covariance, standardised by the sample spread of x_i x_j.
struct CovarianceCheck {
    double max_abs_z = 0.0;
    Eigen::Index i = 0;
    Eigen::Index j = 0;
};
CovarianceCheck covariance_zscore(const Mat& paths, const Mat& target);

// Edges of the driving-noise cells on [0, max t]: grid points plus a dyadic grading of every
// interval toward both ends, refine levels deep.
Vec future_edges(const Vec& out_times, int refine);

// Ascending edges from -horizon to 0: dyadic grading toward 0 inside [-h, 0], geometric beyond.
Vec past_edges(double h, double horizon, int refine);

// Draws M rows of A z with z standard normal of length A.cols(); row k uses stream k of seed.
Mat draw_linear(const Mat& A, Eigen::Index M, std::uint64_t seed);

} // namespace fbmlab
