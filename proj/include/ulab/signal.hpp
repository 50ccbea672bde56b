#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace ulab {

/// Gauss-Bernoulli sparse signal: each entry is 0 with probability 1-rho and
/// standard normal with probability rho.
struct SignalModel {
    int n = 0;
    double rho = 0.0;
    std::uint64_t seed = 0;
};

Eigen::VectorXd sample_signal(const SignalModel& model);

}  // namespace ulab
