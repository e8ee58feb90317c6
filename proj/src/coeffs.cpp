#include <fbmlab/coeffs.hpp>

#include <fbmlab/errors.hpp>
#include <fbmlab/quadrature.hpp>
#include <fbmlab/special.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace fbmlab {

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::size_t direct_limit = 32;

double parity(std::size_t n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// int_{n pi}^inf x^p cos x dx for p < 0 by its asymptotic expansion in 1/x.
double cos_tail(double p, std::size_t n) {
    const double X = pi * static_cast<double>(n);
    double coef = -p;  // (-1)^{k+1} p (p-1) ... (p-2k)
    double xp = std::pow(X, p - 1.0);
    double sum = coef * xp;
    double last = std::abs(sum);
    for (int k = 1; k < 40; ++k) {
        coef *= -(p - 2.0 * k + 1.0) * (p - 2.0 * k);
        xp /= X * X;
        const double term = coef * xp;
        if (std::abs(term) > last) break;
        sum += term;
        last = std::abs(term);
        if (last <= 1e-18 * std::abs(sum)) break;
    }
    return parity(n) * sum;
}

// int_0^{n pi} x^{2H-2} (1 - cos x) dx.
double one_minus_cos_integral(double H, std::size_t n) {
    const double e = 2.0 * H - 2.0;
    if (n > direct_limit) {
        const double X = pi * static_cast<double>(n);
        const double pw = (H == 0.5) ? std::log(X) : std::pow(X, 2.0 * H - 1.0) / (2.0 * H - 1.0);
        if (H == 0.5) throw DomainError("integrated form is not used at H = 1/2");
        return pw - gamma_fn(2.0 * H - 1.0) * std::sin(pi * H) + cos_tail(e, n);
    }
    // (1 - cos x) / x^2 is smooth; the weight is x^{2H}.
    double acc = quad::jacobi_left([](double x) { return x < 1e-4 ? 0.5 - x * x / 24.0 : (1.0 - std::cos(x)) / (x * x); },
                                   0.0, pi, 2.0 * H, 30);
    for (std::size_t k = 1; k < n; ++k) {
        const double lo = pi * static_cast<double>(k);
        acc += quad::legendre([e](double x) { return std::pow(x, e) * (1.0 - std::cos(x)); }, lo, lo + pi, 24);
    }
    return acc;
}

// int_0^{n pi} x^{2H-2} cos x dx for H > 1/2.
double cos_integral(double H, std::size_t n) {
    const double e = 2.0 * H - 2.0;
    if (n > direct_limit) return gamma_fn(2.0 * H - 1.0) * std::sin(pi * H) - cos_tail(e, n);
    double acc = quad::jacobi_left([](double x) { return std::cos(x); }, 0.0, pi, e, 30);
    for (std::size_t k = 1; k < n; ++k) {
        const double lo = pi * static_cast<double>(k);
        acc += quad::legendre([e](double x) { return std::pow(x, e) * std::cos(x); }, lo, lo + pi, 24);
    }
    return acc;
}

void require_index(std::size_t n) {
    if (n == 0) throw PreconditionError("coefficient index starts at 1");
}

BnParts integrated_parts(double H, std::size_t n) {
    const double nn = static_cast<double>(n);
    const double d = pi * pi * nn * nn;
    const double r = rho(H);
    const double q = 2.0 * parity(n) / d;
    if (H == 0.5) return {(1.0 - parity(n)) / d, q};
    const double I1 = std::pow(pi * nn, 1.0 - 2.0 * H) * one_minus_cos_integral(H, n);
    const double p = -2.0 * H * (2.0 * H - 1.0) * r / d * I1 + 2.0 * H * r * (1.0 - parity(n)) / d;
    return {p, q};
}

BnParts cosine_parts(double H, std::size_t n) {
    if (!(H > 0.5)) throw DomainError("cosine form needs H > 1/2");
    const double nn = static_cast<double>(n);
    const double d = pi * pi * nn * nn;
    const double r = rho(H);
    const double I2 = std::pow(pi * nn, 1.0 - 2.0 * H) * cos_integral(H, n);
    return {2.0 * H * (2.0 * H - 1.0) * r / d * I2 - 2.0 * r * H * parity(n) / d, 2.0 * parity(n) / d};
}

} // namespace

BnParts b_n_parts(double H, std::size_t n) {
    require_hurst(H);
    require_index(n);
    return H > 0.5 ? cosine_parts(H, n) : integrated_parts(H, n);
}

double b_n(double H, double a0, std::size_t n) {
    const BnParts bp = b_n_parts(H, n);
    return bp.p + a0 * a0 * bp.q;
}

double b_n_integrated_form(double H, double a0, std::size_t n) {
    require_hurst(H);
    require_index(n);
    const BnParts bp = integrated_parts(H, n);
    return bp.p + a0 * a0 * bp.q;
}

double b_n_cosine_form(double H, double a0, std::size_t n) {
    require_hurst(H);
    require_index(n);
    const BnParts bp = cosine_parts(H, n);
    return bp.p + a0 * a0 * bp.q;
}

double default_a0(double H) { return std::sqrt(rho(H) * H); }

double CoeffTable::a(std::size_t n) const {
    if (n == 0) return a0;
    if (n > b.size()) throw PreconditionError("coefficient index beyond the table");
    return std::sqrt(b[n - 1]);
}

CoeffTable coeff_table(double H, double a0, std::size_t N) {
    require_hurst(H);
    if (N == 0) throw PreconditionError("coefficient table needs N >= 1");
    if (!(a0 >= 0.0)) throw DomainError("a0 must be non-negative");
    CoeffTable t{H, a0, std::vector<double>(N)};
    for (std::size_t n = 1; n <= N; ++n) {
        const double v = b_n(H, a0, n);
        if (v < 0.0) throw CoefficientError(n, v);
        t.b[n - 1] = v;
    }
    return t;
}

Feasibility check_feasibility(double H, double a0, std::size_t N) {
    require_hurst(H);
    Feasibility f;
    BnParts last{0.0, 0.0};
    for (std::size_t n = 1; n <= N; ++n) {
        last = b_n_parts(H, n);
        if (last.p + a0 * a0 * last.q < 0.0) {
            f.feasible = false;
            f.first_negative = n;
            return f;
        }
    }
    // Above 1/2 the a0 term decays like n^-2 and p_n faster, so any a0^2 != rho H fails eventually.
    if (H > 0.5) {
        const double gap = a0 * a0 - rho(H) * H;
        if (gap != 0.0 && std::abs(2.0 * gap) / (pi * pi * N * N) < 1e-6 + std::abs(last.p)) f.tail_undecided = true;
    }
    return f;
}

Boundary feasibility_boundary(double H, std::size_t N) {
    require_hurst(H);
    if (H >= 0.5) return {default_a0(H), 0};
    Boundary best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t n = 1; n <= N; n += 2) {
        const BnParts bp = b_n_parts(H, n);
        const double cap = -bp.p / bp.q;
        if (cap < best.a) best = {cap, n};
    }
    best.a = std::sqrt(std::max(best.a, 0.0));
    return best;
}

AsymptoticFit asymptotic_check(const CoeffTable& table, std::size_t n_lo) {
    AsymptoticFit fit;
    fit.n_lo = n_lo;
    fit.n_hi = table.size();
    if (table.size() < n_lo + 2) throw PreconditionError("table too short for the asymptotic fit");
    const double e = table.H + 0.5;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, m = 0, worst = 0;
    for (std::size_t n = n_lo; n <= table.size(); ++n) {
        const double r = table.a(n) * std::pow(pi * static_cast<double>(n), e) - 1.0;
        worst = std::max(worst, std::abs(r));
        if (r == 0.0) continue;
        const double x = std::log(static_cast<double>(n)), y = std::log(std::abs(r));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        m += 1.0;
    }
    if (worst < 1e-13) {
        fit.exact = true;
        fit.slope = -std::numeric_limits<double>::infinity();
        fit.pass = true;
        return fit;
    }
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.pass = fit.slope <= 2.0 * table.H - 3.0 + 0.3;
    return fit;
}

} // namespace fbmlab
