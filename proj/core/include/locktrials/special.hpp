#pragma once

namespace locktrials {

/// Regularized lower incomplete gamma function P(a, x), a > 0, x >= 0.
/// Series expansion for x < a + 1, continued fraction (modified Lentz)
/// otherwise; absolute accuracy ~1e-14.
double regularized_gamma_p(double a, double x);

/// Standard normal CDF.
double standard_normal_cdf(double z);

/// Normal(mu, sigma) CDF.
double normal_cdf(double x, double mu, double sigma);

} // namespace locktrials
