#pragma once

// Log-space special functions used throughout the library.  Everything here
// works on the positive real axis only; inputs outside the domain throw
// std::domain_error rather than returning NaN.

namespace mixnorm {

// Natural log of the Gamma function for x > 0.
// Lanczos rational approximation evaluated in log space.
double log_gamma(double x);

// log B(x, y) = log_gamma(x) + log_gamma(y) - log_gamma(x + y), for x, y > 0.
double log_beta(double x, double y);

// Euler Beta function B(x, y) = exp(log_beta(x, y)).
double beta(double x, double y);

// The Euler-Gauss ratio (m-1)! m^c / Gamma(m+c).  Tends to 1 as m grows;
// useful for checking asymptotic behaviour of Gamma-ratio series.
// Requires m >= 1 and c > 0.
double eg_ratio(double m, double c);

// Coefficient of x^k in the binomial series (1-x)^{-c} = sum_k coeff(c,k) x^k,
// i.e. Gamma(c+k) / (k! Gamma(c)).  Computed by the stable forward recurrence
// coeff(k) = coeff(k-1) (c+k-1) / k.  Requires c > 0, k >= 0.
double binom_series_coeff(double c, int k);

// Same quantity in log space, via log_gamma.  Provided as the second,
// independent route for testing the recurrence.
double log_binom_series_coeff(double c, int k);

} // namespace mixnorm
