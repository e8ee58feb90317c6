#include <fbmlab/quadrature.hpp>

#include <fbmlab/errors.hpp>
#include <fbmlab/special.hpp>

#include <Eigen/Eigenvalues>

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace fbmlab::quad {

namespace {

// Golub-Welsch for the Jacobi weight (1+y)^beta on [-1, 1], mapped to x^beta on [0, 1].
Rule build_jacobi(int n, double beta) {
    const double alpha = 0.0;
    const double ab = alpha + beta;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double d = 2.0 * k + ab;
        J(k, k) = (k == 0) ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (d * (d + 2.0));
        if (k + 1 < n) {
            const double m = k + 1.0;
            const double dm = 2.0 * m + ab;
            const double b2 = 4.0 * m * (m + alpha) * (m + beta) * (m + ab) / (dm * dm * (dm + 1.0) * (dm - 1.0));
            J(k, k + 1) = J(k + 1, k) = std::sqrt(b2);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success) throw NumericError("Gauss-Jacobi eigenproblem failed");
    const double mu0 = std::pow(2.0, ab + 1.0) * gamma_fn(alpha + 1.0) * gamma_fn(beta + 1.0) / gamma_fn(ab + 2.0);
    const double scale = std::pow(0.5, beta + 1.0);
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        r.nodes[i] = 0.5 * (1.0 + es.eigenvalues()(i));
        r.weights[i] = mu0 * v0 * v0 * scale;
    }
    return r;
}

} // namespace

const Rule& gauss_jacobi(int n, double a) {
    if (n < 1) throw PreconditionError("quadrature order must be >= 1");
    if (!(a > -1.0)) throw DomainError("Jacobi exponent must exceed -1");
    static std::mutex mtx;
    static std::map<std::pair<int, double>, std::unique_ptr<const Rule>> cache;
    std::lock_guard lock(mtx);
    auto& slot = cache[{n, a}];
    if (!slot) slot = std::make_unique<const Rule>(build_jacobi(n, a));
    return *slot;
}

double averaged_limit(std::span<const double> partial_sums, double* err) {
    if (partial_sums.empty()) throw PreconditionError("no partial sums");
    std::vector<double> level(partial_sums.begin(), partial_sums.end());
    double spread = 0.0;
    while (level.size() > 1) {
        spread = std::abs(level[level.size() - 1] - level[level.size() - 2]);
        for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
        level.pop_back();
    }
    if (err) *err = spread;
    return level.front();
}

} // namespace fbmlab::quad
