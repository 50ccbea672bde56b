#pragma once

#include "ulab/denoisers.hpp"

namespace ulab {

/// E[(eta(X + tau Z) - X)^2] for X ~ (1-rho_signal) delta_0 + rho_signal N(0,1)
/// and Z ~ N(0,1), at channel variance tau2.
///
/// The point mass at 0 is handled exactly. The Gaussian branch of X is
/// integrated by panel Gauss-Legendre with a panel boundary tied to the
/// tau-scale structure the denoiser develops near the atom; a fixed-node
/// Hermite rule in X would average across that structure and bias the
/// small-noise slope (which sets the l1 transition line). The inner
/// expectation over Z uses the closed-form soft-thresholding risk in l1 mode
/// and 61-node Gauss-Hermite in Bayes mode.
double denoiser_risk(double tau2, const Denoiser& denoiser, double rho_signal);

/// State-evolution map Psi(sigma^2) = E[(eta(X + (sigma/sqrt(alpha)) Z) - X)^2].
double se_psi(double sigma2, const Denoiser& denoiser, double alpha, double rho_signal);

}  // namespace ulab
