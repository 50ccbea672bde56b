#include "ulab/denoisers.hpp"

#include <cmath>

namespace ulab {

SoftThresholdResult soft_threshold(double r, double theta) {
    const double mag = std::abs(r) - theta;
    if (mag > 0.0) return {r > 0.0 ? mag : -mag, 1.0};
    return {0.0, 0.0};
}

PosteriorMoments bayes_gb_denoise(double r, double tau2, double rho) {
    if (!(tau2 > 0.0)) throw std::invalid_argument("bayes_gb_denoise: tau2 must be > 0");
    if (!(rho > 0.0) || rho > 1.0)
        throw std::invalid_argument("bayes_gb_denoise: rho must be in (0, 1]");
    if (!std::isfinite(r)) throw std::invalid_argument("bayes_gb_denoise: non-finite input");

    const double mean_on = r / (1.0 + tau2);   // Gaussian-branch posterior
    const double var_on = tau2 / (1.0 + tau2);
    if (rho == 1.0) return {mean_on, var_on};

    // log responsibility ratio of the Gaussian branch vs the spike
    const double logit = std::log(rho / (1.0 - rho)) + 0.5 * std::log(tau2 / (1.0 + tau2)) +
                         r * r / (2.0 * tau2 * (1.0 + tau2));
    double w;
    if (logit > 40.0) {
        w = 1.0;
    } else if (logit < -700.0) {
        w = 0.0;
    } else {
        w = 1.0 / (1.0 + std::exp(-logit));
    }
    const double mean = w * mean_on;
    const double variance = w * (var_on + mean_on * mean_on) - mean * mean;
    return {mean, variance};
}

double Denoiser::estimate(double r, double tau2) const {
    if (kind == DenoiserKind::SoftThreshold)
        return soft_threshold(r, param * std::sqrt(tau2)).estimate;
    return bayes_gb_denoise(r, tau2, param).mean;
}

}  // namespace ulab
