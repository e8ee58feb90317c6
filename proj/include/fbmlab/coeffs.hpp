#pragma once

#include <cstddef>
#include <vector>

namespace fbmlab {

// b_n = p + a0^2 q; p and q depend on H and n only.
struct BnParts {
    double p;
    double q;
};

// Coefficients of the exact trigonometric series on [0, 1]:
//   B_t = a0 xi_0 t + sum_n a_n ((cos(pi n t) - 1) xi_n + sin(pi n t) xi'_n),  a_n = sqrt(b_n).
// The integrated-by-parts form is used for H <= 1/2 and the cosine form for H > 1/2.
BnParts b_n_parts(double H, std::size_t n);
double b_n(double H, double a0, std::size_t n);

// The two representations separately; the first is valid on (0, 1), the second for H > 1/2.
double b_n_integrated_form(double H, double a0, std::size_t n);
double b_n_cosine_form(double H, double a0, std::size_t n);

// a0 = sqrt(rho(H) H), admissible for every H.
double default_a0(double H);

struct CoeffTable {
    double H = 0.5;
    double a0 = 0.0;
    std::vector<double> b;  // b[n - 1] = b_n

    [[nodiscard]] std::size_t size() const { return b.size(); }
    [[nodiscard]] double a(std::size_t n) const;
};

// Throws CoefficientError naming the first negative b_n.
CoeffTable coeff_table(double H, double a0, std::size_t N);

struct Feasibility {
    bool feasible = true;
    std::size_t first_negative = 0;  // 0 when none
    bool tail_undecided = false;     // sign of the a0 term cannot be resolved below n = N
};

Feasibility check_feasibility(double H, double a0, std::size_t N);

struct Boundary {
    double a;            // largest feasible a0 over n <= N
    std::size_t argmin;  // index that binds
};

// For H < 1/2 the feasible set is [0, a(H)]; a(H)^2 = min over odd n of -p_n / q_n.
// For H >= 1/2 only a0 = sqrt(rho H) is admissible and that value is returned.
Boundary feasibility_boundary(double H, std::size_t N = 4096);

struct AsymptoticFit {
    double slope = 0.0;  // of log|a_n (pi n)^{H+1/2} - 1| against log n
    bool exact = false;  // residuals vanish to rounding (H = 1/2)
    std::size_t n_lo = 64;
    std::size_t n_hi = 0;
    bool pass = false;  // slope <= 2H - 3 + 0.3
};

AsymptoticFit asymptotic_check(const CoeffTable& table, std::size_t n_lo = 64);

} // namespace fbmlab
