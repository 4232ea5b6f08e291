#pragma once

#include "mixnorm/analytic_fn.hpp"
#include "mixnorm/integral_means.hpp"

// Norms of the two-parameter family of weighted spaces on the disk.  A space
// is addressed by (p, q, a) with 0 < p, q <= inf and a > 0:
//
//   finite q:   ||f||^q = integral_0^1 a q (1-r)^{a q - 1} m_p(r)^q dr,
//   q = inf:    ||f||   = sup_{0 <= rho < 1} (1 - rho^2)^a M_p(rho; f),
//
// where m_p(r) = M_p(sqrt(r); f).  The finite-q integral is evaluated after
// the substitution s = (1-r)^{a q}, which removes the endpoint weight
// entirely and leaves integral_0^1 m_p^q(1 - s^{1/(a q)}) ds.

namespace mixnorm {

struct SpaceParams {
    SpaceParams(ExtExponent p_, ExtExponent q_, double a_);

    ExtExponent p;
    ExtExponent q;
    double a;

    friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

enum class NormMethod { quadrature, closed_form, series, sup_scan };

const char* to_string(NormMethod m);

struct NormResult {
    double value = 0.0;
    NormMethod method = NormMethod::quadrature;
    double abs_error_estimate = 0.0;
    bool diverged = false; // value is +inf; only the boundary-singular family
    bool converged = true;
};

struct NormOptions {
    double radial_rel_tol = 1e-10;
    int radial_max_depth = 320;
    MeanOptions mean{};
    // Route every norm through quadrature / modulus scans: no closed forms,
    // no coefficient series.  Used for independent verification.
    bool force_quadrature = false;
};

NormResult mixed_norm(const AnalyticFn& f, const SpaceParams& space, const NormOptions& opts = {});

// Weighted Bergman norm: A^p_alpha == (p, p, (alpha+1)/p).  Requires finite
// p > 0 and alpha > -1.
NormResult bergman_norm(const AnalyticFn& f, double p, double alpha, const NormOptions& opts = {});

// Hardy norm sup_r M_p(r; f).  For p = 2 on a coefficient family this is the
// full Parseval sum; otherwise the means are scanned along r_k = 1 - 2^{-k}.
NormResult hardy_norm(const AnalyticFn& f, ExtExponent p, const NormOptions& opts = {});

// Closed form ||z^n||_{p,q,a} = (a q B(a q, n q / 2 + 1))^{1/q}; independent
// of p.  Finite q only.
double monomial_norm_closed(int n, double q, double a);

struct SeriesNorm {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long terms_used = 0;
    bool diverged = false;
};

// ||f_n||^q in (inf, q, a) for f_n = (1 - z^{2n})^{-2 gamma}, by the
// Gamma-ratio series.  Requires 0 < gamma < a/2 for convergence.
SeriesNorm fn_hinfq_norm_q(int n, double gamma, double q, double a);

// ||f_n||^w in the Bergman space A^w_{b v - 1}, by the squared-coefficient
// series for (1 - z^{2n})^{-gamma w}.  Only w = 2 is accepted: there the
// expansion is exactly the Parseval identity.  Other exponents throw; use
// mixed_norm quadrature for them.  Requires gamma w < (b v + 1)/2 for
// convergence.
SeriesNorm fn_bergman_norm_w(int n, double gamma, double w, double b, double v);

} // namespace mixnorm
