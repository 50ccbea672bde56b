#pragma once

#include <Eigen/Dense>

#include "ulab/rng.hpp"

namespace ulab {

/// Thin SVD Phi = U diag(s) Vt with r = min(m, n) retained components.
/// Rows of Vt are the right singular vectors; when m > n, Vt is the full
/// n x n orthogonal factor.
struct SvdBundle {
    Eigen::MatrixXd U;   // m x r
    Eigen::VectorXd s;   // r, nonincreasing, >= 0
    Eigen::MatrixXd Vt;  // r x n
};

/// SVD via eigendecomposition of the smaller Gram matrix; falls back to
/// BDCSVD when the spectrum is too ill-conditioned for the Gram route.
SvdBundle svd_of(const Eigen::MatrixXd& dense);

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the
/// R-diagonal sign fix.
Eigen::MatrixXd haar_orthogonal(int k, Rng& rng);

/// Singular values of a fresh m x n Gaussian matrix with N(0, 1/n) entries,
/// sorted nonincreasing (empirical Marcenko-Pastur sample).
Eigen::VectorXd marcenko_pastur_singular_values(int m, int n, Rng& rng);

}  // namespace ulab
