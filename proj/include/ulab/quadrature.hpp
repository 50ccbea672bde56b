#pragma once

#include <Eigen/Dense>

namespace ulab {

struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// Gauss-Hermite rule for the weight exp(-t^2) (physicists' convention).
/// E[f(Z)] for Z ~ N(0,1) is sum_i w_i f(sqrt(2) t_i) / sqrt(pi).
const QuadratureRule& gauss_hermite(int n);

/// Rule already rescaled for expectations against the standard normal:
/// E[f(Z)] = sum_i weights_i f(nodes_i).
const QuadratureRule& gauss_hermite_normal(int n);

/// Gauss-Legendre rule on [-1, 1].
const QuadratureRule& gauss_legendre(int n);

}  // namespace ulab
