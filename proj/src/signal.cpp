#include "ulab/signal.hpp"

#include <stdexcept>

#include "ulab/rng.hpp"

namespace ulab {

Eigen::VectorXd sample_signal(const SignalModel& model) {
    if (model.n < 1) throw std::invalid_argument("sample_signal: n must be >= 1");
    if (!(model.rho > 0.0) || model.rho > 1.0)
        throw std::invalid_argument("sample_signal: rho must be in (0, 1]");

    Rng rng(model.seed);
    Eigen::VectorXd x(model.n);
    for (int i = 0; i < model.n; ++i) {
        const double u = rng.uniform();
        x[i] = u < model.rho ? rng.normal() : 0.0;
    }
    return x;
}

}  // namespace ulab
