#pragma once

#include <fbmlab/genpath.hpp>

#include <cstdint>

namespace fbmlab {

// One draw of four processes driven by the same Brownian motion W on the past and on [0, T]:
//   B    Mandelbrot-van Ness fBm,  X    Riemann-Liouville process from W on [0, T],
//   Bhat periodic fBm from W on [0, 1],  Bbar antiperiodic fBm from W on [0, 1].
// B - X depends only on the past of W. Bhat and Bbar are given on the output times <= 1.
struct CoupledSample {
    Vec times;
    Vec B;
    Vec X;
    Vec Bhat;
    Vec Bbar;
};

// Precomputes the loadings once; sample(k) is deterministic in (cfg.seed, k).
class CoupledGenerator {
public:
    explicit CoupledGenerator(const GeneratorConfig& cfg, int fold_copies = 64);

    [[nodiscard]] CoupledSample sample(std::uint64_t stream) const;
    [[nodiscard]] const Vec& times() const { return times_; }
    [[nodiscard]] Eigen::Index unit_count() const { return n_unit_; }

private:
    GeneratorConfig cfg_;
    Vec times_;
    Eigen::Index n_unit_ = 0;   // output times <= 1
    Eigen::Index past_ = 0;     // past cells
    Eigen::Index future_ = 0;   // cells on [0, max(T, 1)]
    Eigen::Index unit_cells_ = 0;
    Mat R_;     // X loadings on future cells
    Mat P_;     // B - X loadings on past cells
    Mat Hhat_;  // Bhat - X loadings on unit cells
    Mat Hbar_;  // Bbar - X loadings on unit cells
};

CoupledSample coupled_gen(const GeneratorConfig& cfg);

} // namespace fbmlab
