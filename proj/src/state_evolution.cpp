#include "ulab/state_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ulab/quadrature.hpp"

namespace ulab {

namespace {

constexpr int kHermiteNodes = 61;
constexpr int kLegendreNodes = 32;
constexpr double kXMax = 9.0;  // N(0,1) tail mass beyond 9 is ~1e-19

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}
double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }
double normal_sf(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

/// Closed-form E_Z[(soft(x + tau Z, theta) - x)^2].
double soft_risk_at(double x, double tau, double theta) {
    const double a = (theta - x) / tau;
    const double b = (-theta - x) / tau;
    const double upper = (1.0 + a * a) * normal_sf(a) - a * normal_pdf(a);
    const double lower = (1.0 + b * b) * normal_cdf(b) + b * normal_pdf(b);
    return x * x * (normal_cdf(a) - normal_cdf(b)) + tau * tau * (upper + lower);
}

/// E_Z[(eta(x + tau Z) - x)^2] for the Bayes denoiser, Gauss-Hermite in Z.
double bayes_risk_at(double x, double tau, double tau2, double rho_prior) {
    const QuadratureRule& gh = gauss_hermite_normal(kHermiteNodes);
    double acc = 0.0;
    for (int i = 0; i < gh.nodes.size(); ++i) {
        const double diff = bayes_gb_denoise(x + tau * gh.nodes[i], tau2, rho_prior).mean - x;
        acc += gh.weights[i] * diff * diff;
    }
    return acc;
}

}  // namespace

double denoiser_risk(double tau2, const Denoiser& denoiser, double rho_signal) {
    if (!std::isfinite(tau2) || tau2 < 0.0)
        throw std::invalid_argument("denoiser_risk: tau2 must be finite and >= 0");
    if (!(rho_signal > 0.0) || rho_signal > 1.0)
        throw std::invalid_argument("denoiser_risk: rho_signal must be in (0, 1]");
    if (tau2 == 0.0) return 0.0;

    const double tau = std::sqrt(tau2);
    const bool l1 = denoiser.kind == DenoiserKind::SoftThreshold;
    const double theta = l1 ? denoiser.param * tau : 0.0;
    auto risk_at = [&](double x) {
        return l1 ? soft_risk_at(x, tau, theta) : bayes_risk_at(x, tau, tau2, denoiser.param);
    };

    const double atom = risk_at(0.0);

    // Panel edges adapted to the feature scale near x = 0.
    const double rho_eff = std::min(rho_signal, 0.5);
    const double feature = tau * (3.0 + std::sqrt(2.0 * std::log1p(1.0 / (rho_eff * tau))));
    const double x1 = std::min(8.0 * feature, 1.0);
    const double x2 = std::clamp(12.0 * feature, 1.0, 4.0);
    const double edges[4] = {0.0, x1, x2, kXMax};

    const QuadratureRule& gl = gauss_legendre(kLegendreNodes);
    double branch = 0.0;
    for (int p = 0; p < 3; ++p) {
        const double lo = edges[p], hi = edges[p + 1];
        if (hi <= lo) continue;
        const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
        for (int i = 0; i < gl.nodes.size(); ++i) {
            const double x = mid + half * gl.nodes[i];
            branch += half * gl.weights[i] * risk_at(x) * normal_pdf(x);
        }
    }
    branch *= 2.0;  // integrand is even in x

    return (1.0 - rho_signal) * atom + rho_signal * branch;
}

double se_psi(double sigma2, const Denoiser& denoiser, double alpha, double rho_signal) {
    if (!std::isfinite(sigma2) || sigma2 < 0.0)
        throw std::invalid_argument("se_psi: sigma2 must be finite and >= 0");
    if (!std::isfinite(alpha) || !(alpha > 0.0))
        throw std::invalid_argument("se_psi: alpha must be finite and > 0");
    return denoiser_risk(sigma2 / alpha, denoiser, rho_signal);
}

}  // namespace ulab
