#include "ulab/svd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ulab {

namespace {

Eigen::MatrixXd gaussian_matrix(int m, int n, double stddev, Rng& rng) {
    Eigen::MatrixXd a(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) a(i, j) = stddev * rng.normal();
    return a;
}

SvdBundle svd_bdc(const Eigen::MatrixXd& dense) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV().transpose()};
}

}  // namespace

SvdBundle svd_of(const Eigen::MatrixXd& dense) {
    const Eigen::Index m = dense.rows(), n = dense.cols();
    if (m == 0 || n == 0) throw std::invalid_argument("svd_of: empty matrix");

    // Eigendecompose the smaller Gram matrix; recover the other factor by one
    // GEMM. Much faster than a bidiagonal SVD for the sizes used here, and
    // accurate as long as the squared condition number stays in range.
    const bool wide = m <= n;
    const Eigen::MatrixXd gram =
        wide ? Eigen::MatrixXd(dense * dense.transpose())
             : Eigen::MatrixXd(dense.transpose() * dense);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    if (es.info() != Eigen::Success) return svd_bdc(dense);

    const Eigen::Index r = gram.rows();
    Eigen::VectorXd s(r);
    for (Eigen::Index i = 0; i < r; ++i)
        s[i] = std::sqrt(std::max(es.eigenvalues()[r - 1 - i], 0.0));
    if (!(s[0] > 0.0) || s[r - 1] < 1e-10 * s[0]) return svd_bdc(dense);

    Eigen::MatrixXd q(r, r);
    for (Eigen::Index i = 0; i < r; ++i) q.col(i) = es.eigenvectors().col(r - 1 - i);

    SvdBundle out;
    out.s = std::move(s);
    if (wide) {
        out.U = std::move(q);
        out.Vt = out.s.cwiseInverse().asDiagonal() * (out.U.transpose() * dense);
    } else {
        out.Vt = q.transpose();
        out.U = (dense * q) * out.s.cwiseInverse().asDiagonal();
    }
    return out;
}

Eigen::MatrixXd haar_orthogonal(int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("haar_orthogonal: k must be >= 1");
    const Eigen::MatrixXd a = gaussian_matrix(k, k, 1.0, rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(k, k);
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < k; ++i)
        if (r(i, i) < 0.0) q.col(i) = -q.col(i);
    return q;
}

Eigen::VectorXd marcenko_pastur_singular_values(int m, int n, Rng& rng) {
    if (m < 1 || n < 1) throw std::invalid_argument("marcenko_pastur_singular_values: bad size");
    const Eigen::MatrixXd a = gaussian_matrix(m, n, 1.0 / std::sqrt(double(n)), rng);
    const bool wide = m <= n;
    const Eigen::MatrixXd gram = wide ? Eigen::MatrixXd(a * a.transpose())
                                      : Eigen::MatrixXd(a.transpose() * a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.compute(gram, Eigen::EigenvaluesOnly);
    const Eigen::Index r = gram.rows();
    Eigen::VectorXd s(r);
    for (Eigen::Index i = 0; i < r; ++i)
        s[i] = std::sqrt(std::max(es.eigenvalues()[r - 1 - i], 0.0));
    return s;
}

}  // namespace ulab
