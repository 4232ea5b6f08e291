#pragma once

#include "mixnorm/classify.hpp"
#include "mixnorm/norms.hpp"

#include <string>

// Constructive counterexamples to contractivity.  When the embedding
// H(p, q, a) -> H(u, v, b) holds but is not a contraction, an explicit
// function with target norm strictly above source norm can always be
// produced:
//
//   q = inf:  f(z) = (1 + z^2)^a, whose source norm is exactly 1 while any
//             finite-v target norm strictly exceeds 1;
//   q < inf:  f_n(z) = (1 - z^{2n})^{-2 gamma} with gamma in (0, a/2); the
//             ratio of target to source norm grows without bound in n, and
//             the search compares the cheap relaxed pair
//             ||f_n||_{inf,q,a} < ||f_n||_{A^w_{bv-1}},  w = min(u, v),
//             which bounds the original gap from below.

namespace mixnorm {

struct WitnessOptions {
    double gamma_fraction = 0.25; // gamma = fraction * a, in (0, 1/2)
    int max_log2_n = 20;          // sequence search tries n = 1, 2, 4, ...
    double rel_margin = 1e-3;     // required relaxed ratio excess
    NormOptions certificate{};    // options for the certified norm pair
};

struct Witness {
    AnalyticFn fn = AnalyticFn::monomial(0);
    SpaceParams from{ExtExponent::infinity(), ExtExponent::infinity(), 1.0};
    SpaceParams into{ExtExponent::infinity(), ExtExponent::infinity(), 1.0};
    std::string construction; // "binomial-power" or "sequence"

    // Certified norms in the original pair of spaces (target minus source
    // must exceed the combined error for a valid witness).
    double from_norm = 0.0;
    double into_norm = 0.0;
    double from_error = 0.0;
    double into_error = 0.0;

    // Sequence-search internals (zero for the binomial-power construction).
    int n = 0;
    double gamma = 0.0;
    double relaxed_from = 0.0;
    double relaxed_into = 0.0;
    long candidates_tried = 0;
};

// Throws std::domain_error when the pair is contractive, not included, or in
// the open regime p < u where no construction is known.
Witness find_witness(const SpaceParams& from, const SpaceParams& into,
                     const WitnessOptions& opts = {});

struct WitnessCheck {
    bool valid = false;
    double from_norm = 0.0;
    double into_norm = 0.0;
    double gap = 0.0;
    double combined_error = 0.0;
};

// Independent re-verification: both norms recomputed through quadrature and
// modulus scans only (no closed forms or coefficient series).
WitnessCheck verify_witness(const Witness& w, const NormOptions& opts = {});

} // namespace mixnorm
