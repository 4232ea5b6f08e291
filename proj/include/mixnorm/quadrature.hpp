#pragma once

#include <functional>

// Adaptive Gauss-Legendre quadrature.  Panels are bisected until the local
// parent/children disagreement meets a length-proportional share of the
// global tolerance, so integrable endpoint singularities are absorbed by a
// geometric mesh instead of a uniform one.

namespace mixnorm {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0; // accumulated local error estimates
    long n_evals = 0;
    bool converged = true;  // false if some panel hit the depth cap unresolved
};

struct QuadOptions {
    double rel_tol = 1e-10;
    int max_depth = 320;     // bisection depth; deep grading handles s^c endpoints
    long max_panels = 40000; // hard cap on processed panels
    // When positive, seed with dyadic panels graded toward the lower
    // endpoint, [lo + len 2^-(j+1), lo + len 2^-j], down to this many levels.
    // Bisection alone cannot find a boundary layer that is narrower than the
    // span of the lowest Gauss node: every node sees the smooth bulk, the
    // panel looks converged, and the layer's mass is silently dropped.  The
    // graded seed guarantees one panel per octave, so a layer of any width
    // has nodes inside it.
    int dyadic_seed_levels = 0;
};

// Integrate f over [lo, hi].  f must be finite on the open interval; the
// endpoints themselves are never evaluated (Gauss nodes are interior).
QuadResult adaptive_gauss_legendre(const std::function<double(double)>& f, double lo, double hi,
                                   const QuadOptions& opts = {});

// Fixed 16-point Gauss-Legendre rule on [lo, hi]; building block of the
// adaptive driver, exposed for tests.
double gauss_legendre_16(const std::function<double(double)>& f, double lo, double hi);

} // namespace mixnorm
