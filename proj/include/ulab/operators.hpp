#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "ulab/svd.hpp"

namespace ulab {

/// An m x n linear measurement map with forward/adjoint application.
///
/// Instances are immutable after construction and cheap to copy (shared
/// state). Fast-transform ensembles (DCT, Hadamard) carry O(n log n) apply
/// paths and materialize their dense view only on demand; the SVD is computed
/// lazily once and cached, safe under concurrent access.
class MeasurementOperator {
  public:
    int rows() const;
    int cols() const;
    const std::string& ensemble_tag() const;

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& y) const;

    const Eigen::MatrixXd& dense_view() const;

    bool has_singular_values() const;
    /// Exact singular values when known at construction (nonincreasing).
    const Eigen::VectorXd& singular_values() const;

    /// True when Phi Phi^T = I holds structurally (sub-sampled orthogonal rows).
    bool row_orthonormal() const;

    const SvdBundle& svd() const;

    /// Wrap an existing dense matrix.
    static MeasurementOperator from_dense(Eigen::MatrixXd dense, std::string tag,
                                          bool row_orthonormal = false,
                                          std::optional<Eigen::VectorXd> singular_values = {});

    struct Impl;
    explicit MeasurementOperator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  private:
    std::shared_ptr<const Impl> impl_;
};

enum class Activation { Relu, Sign, Tanh };

Activation parse_activation(const std::string& name);
std::string activation_name(Activation a);

/// Spectrum supplied to the rotationally invariant builder: explicit values,
/// an empirical Marcenko-Pastur sample, or a flat spectrum.
struct SpectrumSpec {
    enum class Kind { Explicit, Gaussian, Flat };
    Kind kind = Kind::Gaussian;
    Eigen::VectorXd values;  // Explicit only
    double flat_value = 1.0;

    static SpectrumSpec explicit_values(Eigen::VectorXd v);
    static SpectrumSpec gaussian();
    static SpectrumSpec flat(double value = 1.0);
};

/// i.i.d. N(0, 1/n) entries; dense.
MeasurementOperator build_gaussian(int m, int n, std::uint64_t seed);

/// m distinct rows of the orthonormal n x n DCT matrix
/// Y_jk = sqrt(2/n) eps_k cos(pi (2j+1) k / 2n), chosen uniformly without
/// replacement; O(n log n) apply, Phi Phi^T = I.
MeasurementOperator build_subsampled_dct(int m, int n, std::uint64_t seed);

/// m sub-sampled rows of the Sylvester Hadamard matrix H / sqrt(n);
/// O(n log n) apply via the Walsh-Hadamard butterfly, Phi Phi^T = I.
MeasurementOperator build_hadamard(int m, int n, std::uint64_t seed);

/// Random features Phi = f(W X) applied elementwise, W m x n with N(0, 1/n)
/// entries and X n x n with N(0, 1) entries so W X entries are approximately
/// standard normal. With standardize set, columns are centered and the matrix
/// rescaled so the mean column norm is 1.
MeasurementOperator build_random_features(int m, int n, Activation activation,
                                           std::uint64_t seed, bool standardize = false);

/// Haar-wavelet matrix from the recursion W_2 = [[1,1],[1,-1]],
/// W_2k = [W_k (x) [1,-1] ; I_k (x) [1,1]], rows sub-sampled and globally
/// scaled by 1/sqrt(n). Row norms are deliberately non-uniform; the
/// per_row_normalize flag exists for exploration only.
MeasurementOperator build_haar_wavelet(int m, int n, std::uint64_t seed,
                                       bool per_row_normalize = false);

/// Phi = U Sigma V with U, V independent Haar-orthogonal and Sigma from the
/// spectrum spec; singular values stored exactly.
MeasurementOperator build_rot_invariant(int m, int n, const SpectrumSpec& spectrum,
                                        std::uint64_t seed);

/// Walsh-Hadamard transform of x (Sylvester ordering, unnormalized: H x).
void walsh_hadamard_inplace(Eigen::VectorXd& x);

}  // namespace ulab
