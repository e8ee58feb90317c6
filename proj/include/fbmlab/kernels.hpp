#pragma once

#include <fbmlab/path.hpp>

#include <memory>
#include <vector>

namespace fbmlab {

// Order pair of the operator G^{J,H}; both in (0, 1).
struct KernelSpec {
    double J;
    double H;

    KernelSpec(double j, double h);
    [[nodiscard]] double a() const { return H - J; }        // order of the fractional integral
    [[nodiscard]] double b() const { return H + J - 1.0; }  // exponent of the weight v^b
};

// phi^{J,H}(u) = (H-J) int_1^u (v^b - 1)(v - 1)^{a-1} dv + (u - 1)^a for u > 1, by direct quadrature.
double phi_JH(double u, const KernelSpec& k);

// Same function parameterised by w = u - 1 > 0, which avoids cancellation near u = 1.
double phi_of_w(double w, const KernelSpec& k);

// phi'(u) = (H-J)(u-1)^{a-1} u^b.
double phi_prime(double u, const KernelSpec& k);

// Cubic Hermite table of phi on log(u - 1), built once with exact slopes; immutable afterwards.
// Outside the tabulated range it falls back to phi_of_w.
class PhiTable {
public:
    explicit PhiTable(const KernelSpec& k);
    [[nodiscard]] double operator()(double w) const;
    [[nodiscard]] const KernelSpec& spec() const { return spec_; }

private:
    KernelSpec spec_;
    double x_lo_;
    double step_;
    std::vector<double> value_;
    std::vector<double> slope_;
};

// Shared table per (J, H); concurrent callers receive the same instance.
std::shared_ptr<const PhiTable> phi_table(const KernelSpec& k);

// K(t, s) = phi(t/s) s^{H-J} / Gamma(H-J+1) for 0 < s < t.
double K0p(double t, double s, const KernelSpec& k);

// Kernel on the negative half-line: phi(s/t) (-t)^{2H} (-s)^{-H-J} / Gamma(H-J+1) for s < t < 0.
double Kplus(double t, double s, const KernelSpec& k);

// int_lo^hi K(t, s) ds for 0 <= lo < hi <= t, resolving the end singularities.
double kernel_cell_integral(double t, double lo, double hi, const KernelSpec& k);

// M(i, j) = int over cell j of K(t_i, s) ds, zero for cells right of t_i. Cells are given by
// consecutive entries of edges, which start at 0.
Mat kernel_cell_matrix(const Vec& out_times, const Vec& edges, const KernelSpec& k);

enum class GMode { Factorised, Direct };

// G^{J,H} f = int_0^t K(t, s) df(s). Factorised applies pi_tilde, riemann_liouville, pi_tilde;
// Direct sums cell-integrated kernels against the increments.
SampledPath apply_G(const SampledPath& f, const KernelSpec& k, GMode mode = GMode::Factorised);

} // namespace fbmlab
