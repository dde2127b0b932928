#pragma once

#include <span>

namespace ghgkit {

// Gamma distribution in (shape k, scale theta) form. mean = k*theta,
// variance = k*theta^2.
struct GammaParams {
    double shape = 1.0;
    double scale = 1.0;

    double mean() const { return shape * scale; }
    double variance() const { return shape * scale * scale; }
};

double gamma_log_pdf(const GammaParams& p, double y);
double gamma_cdf(const GammaParams& p, double y);
double gamma_quantile(const GammaParams& p, double u);

// Moment matching: k = mean^2/var, theta = var/mean (unbiased sample variance).
GammaParams fit_moments(std::span<const double> sample);

// Gradient and diagonal curvature of the negative log-likelihood in the
// boosting coordinates (eta1, eta2) = (log k, log mu) with mu = k*theta.
struct GammaGradHess {
    double g_log_k = 0.0;
    double h_log_k = 0.0;
    double g_log_mu = 0.0;
    double h_log_mu = 0.0;
};

GammaGradHess gamma_nll_grad_hess(double log_k, double log_mu, double y);

}  // namespace ghgkit
