#pragma once

#include <stdexcept>

namespace ulab {

struct SoftThresholdResult {
    double estimate;
    double derivative;  // 1 if |r| > theta else 0
};

/// sign(r) * max(|r| - theta, 0) and its a.e. derivative.
SoftThresholdResult soft_threshold(double r, double theta);

struct PosteriorMoments {
    double mean;
    double variance;
};

/// Posterior mean/variance of x under prior (1-rho) delta_0 + rho N(0,1)
/// given the observation r = x + tau z, z ~ N(0,1).
///
/// The Bernoulli responsibility is computed in the log domain, so the
/// function stays accurate for |r|/tau well past the range where the
/// likelihood ratio overflows.
PosteriorMoments bayes_gb_denoise(double r, double tau2, double rho);

enum class DenoiserKind { SoftThreshold, BayesGaussBernoulli };

/// Scalar separable denoiser. For SoftThreshold the parameter is the
/// threshold-to-noise ratio kappa (threshold kappa * tau at channel variance
/// tau^2); for BayesGaussBernoulli it is the prior sparsity rho.
struct Denoiser {
    DenoiserKind kind;
    double param;

    static Denoiser soft(double kappa) {
        if (!(kappa >= 0.0)) throw std::invalid_argument("Denoiser: kappa must be >= 0");
        return {DenoiserKind::SoftThreshold, kappa};
    }
    static Denoiser bayes(double rho) {
        if (!(rho > 0.0) || rho > 1.0)
            throw std::invalid_argument("Denoiser: rho must be in (0, 1]");
        return {DenoiserKind::BayesGaussBernoulli, rho};
    }

    /// Estimate at channel variance tau2 (threshold scales as kappa * tau).
    double estimate(double r, double tau2) const;
};

}  // namespace ulab
