#pragma once

#include "mixnorm/analytic_fn.hpp"

// Integral means M_p(rho; f) = (average of |f|^p over the circle of radius
// rho)^{1/p}, with M_inf the maximum modulus.  All routines are parameterized
// internally by t = 1 - rho^2 so that radii exponentially close to 1 remain
// meaningful for the boundary-singular family.

namespace mixnorm {

struct MeanResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long n_samples = 0;
    bool converged = true;
};

struct MeanOptions {
    double rel_tol = 1e-11;
    long max_samples = 1L << 20;
    // Forbid coefficient (Parseval) and exact shortcuts; every mean goes
    // through quadrature or a modulus scan.  Used by independent verification.
    bool force_quadrature = false;
};

// M_p(radius; f) for radius in [0, 1] (strictly < 1 for the singular family).
MeanResult integral_mean(const AnalyticFn& f, ExtExponent p, double radius,
                         const MeanOptions& opts = {});

// Same mean addressed by t = 1 - radius^2.
MeanResult integral_mean_from_t(const AnalyticFn& f, ExtExponent p, double t,
                                const MeanOptions& opts = {});

// m_p(r) = M_p(sqrt(r); f), the square-root reparameterization used by the
// radial norm integrals.
double m_small(const AnalyticFn& f, ExtExponent p, double r, const MeanOptions& opts = {});

// Periodic trapezoidal rule with sample doubling until the relative change of
// the mean drops below opts.rel_tol.  Exposed for cross-route tests; finite p
// only.
MeanResult circle_mean_trapezoid(const AnalyticFn& f, double p, double t,
                                 const MeanOptions& opts = {});

// Parseval route for p = 2 on the coefficient stream; exact for polynomials,
// tail-corrected truncation for the infinite families.
MeanResult circle_mean_parseval(const AnalyticFn& f, double t, const MeanOptions& opts = {});

// Adaptive Gauss-Legendre over the full circle; the robust default for
// fractional p, where |f|^p loses smoothness at zeros of f near the circle.
MeanResult circle_mean_adaptive(const AnalyticFn& f, double p, double t,
                                const MeanOptions& opts = {});

// Maximum modulus over the circle: dense scan plus golden-section refinement.
MeanResult circle_sup(const AnalyticFn& f, double t, const MeanOptions& opts = {});

} // namespace mixnorm
