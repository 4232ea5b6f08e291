#pragma once

#include "mixnorm/norms.hpp"

#include <string>

// Decision procedures for the ordering of the (p, q, a) spaces: when one
// space embeds in another, and when the identity map between them is a
// contraction.  All comparisons are exact floating-point comparisons on the
// given parameters; callers decide how to round their inputs.

namespace mixnorm {

enum class Tri { yes, no, unknown_open };

const char* to_string(Tri t);

struct InclusionResult {
    Tri included = Tri::no;
    std::string rule; // which clause of the characterization fired
};

struct ContractivityResult {
    Tri contractive = Tri::no;
    std::string rule;
    bool included = false; // the underlying inclusion even holds
};

// Does H(p, q, a) embed into H(u, v, b)?  Decidable for every parameter
// choice; the two regimes p >= u and p < u have different characterizations.
InclusionResult inclusion(const SpaceParams& from, const SpaceParams& into);

// Is the embedding H(p, q, a) -> H(u, v, b) a contraction (norm <= 1)?
// Decidable when p >= u; for p < u with a strict inclusion the answer is not
// known, which is reported as unknown_open.
ContractivityResult contractive(const SpaceParams& from, const SpaceParams& into);

// Specialization to Bergman spaces: is A^p_alpha -> A^q_beta contractive?
// Decidable when p >= q.
ContractivityResult bergman_contractive(double p, double alpha, double q, double beta);

} // namespace mixnorm
