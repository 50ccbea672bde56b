#include "ulab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace ulab {

namespace {

// Golub-Welsch on the Hermite Jacobi matrix: nodes are the eigenvalues of the
// symmetric tridiagonal matrix with off-diagonal sqrt(k/2), weights
// sqrt(pi) * (first eigenvector component)^2.
QuadratureRule make_gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    QuadratureRule rule;
    rule.nodes = es.eigenvalues();
    rule.weights = std::sqrt(std::numbers::pi) *
                   es.eigenvectors().row(0).transpose().array().square();
    return rule;
}

QuadratureRule make_gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration from the Chebyshev-based initial guess.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

template <typename Maker>
const QuadratureRule& cached(int n, std::map<int, QuadratureRule>& cache,
                             std::mutex& mutex, Maker make) {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make(n)).first;
    return it->second;
}

}  // namespace

const QuadratureRule& gauss_hermite(int n) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mutex;
    return cached(n, cache, mutex, make_gauss_hermite);
}

const QuadratureRule& gauss_hermite_normal(int n) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mutex;
    return cached(n, cache, mutex, [](int k) {
        QuadratureRule rule = make_gauss_hermite(k);
        rule.nodes *= std::numbers::sqrt2;
        rule.weights /= std::sqrt(std::numbers::pi);
        return rule;
    });
}

const QuadratureRule& gauss_legendre(int n) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mutex;
    return cached(n, cache, mutex, make_gauss_legendre);
}

}  // namespace ulab
