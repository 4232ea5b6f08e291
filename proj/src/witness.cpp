#include "mixnorm/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace mixnorm {

namespace {

void certify(Witness& w, const NormOptions& opts)
{
    NormResult lhs = mixed_norm(w.fn, w.from, opts);
    NormResult rhs = mixed_norm(w.fn, w.into, opts);
    w.from_norm = lhs.value;
    w.from_error = lhs.abs_error_estimate;
    w.into_norm = rhs.value;
    w.into_error = rhs.abs_error_estimate;
}

Witness witness_qinf(const SpaceParams& from, const SpaceParams& into,
                     const WitnessOptions& opts)
{
    Witness w;
    w.from = from;
    w.into = into;
    w.construction = "binomial-power";
    w.fn = AnalyticFn::binomial_power(from.a);
    certify(w, opts.certificate);
    return w;
}

Witness witness_sequence(const SpaceParams& from, const SpaceParams& into,
                         const WitnessOptions& opts)
{
    const double q = from.q.value();
    const double a = from.a;
    const double v = into.q.value();
    const double b = into.a;
    const double w_exp = std::min(into.p.value(), v);
    const double gamma = opts.gamma_fraction * a;
    if (!(opts.gamma_fraction > 0.0) || !(opts.gamma_fraction < 0.5))
        throw std::domain_error("gamma_fraction must lie in (0, 1/2)");

    Witness w;
    w.from = from;
    w.into = into;
    w.construction = "sequence";
    w.gamma = gamma;

    // The lower bound ||f_n||_{A^w_{bv-1}} comes from the w = 2 coefficient
    // series when available; any other w goes through quadrature of the
    // equivalent mixed norm H(w, w, bv/w).
    const SpaceParams relax_into{ExtExponent(w_exp), ExtExponent(w_exp),
                                 b * v / w_exp};
    for (int log2n = 0; log2n <= opts.max_log2_n; ++log2n) {
        const int n = 1 << log2n;
        ++w.candidates_tried;
        const SeriesNorm lhs_q = fn_hinfq_norm_q(n, gamma, q, a);
        if (lhs_q.diverged)
            continue;
        const double lhs = std::pow(lhs_q.value, 1.0 / q);
        double rhs;
        double rhs_err;
        if (w_exp == 2.0) {
            const SeriesNorm rhs_w = fn_bergman_norm_w(n, gamma, w_exp, b, v);
            if (rhs_w.diverged)
                continue;
            rhs = std::pow(rhs_w.value, 1.0 / w_exp);
            rhs_err = rhs_w.abs_error_estimate * rhs /
                      (w_exp * std::max(rhs_w.value, 1e-300));
        } else {
            const NormResult rhs_n =
                mixed_norm(AnalyticFn::fn_seq(n, gamma), relax_into, opts.certificate);
            if (rhs_n.diverged || !std::isfinite(rhs_n.value))
                continue;
            rhs = rhs_n.value;
            rhs_err = rhs_n.abs_error_estimate;
        }
        // Both norms tend to 1 from above as n grows; the mismatch lives in
        // the excesses (which decay like n^{-aq} and n^{-bv}), so the margin
        // must be measured against the excess, not against the norm.  The
        // error terms propagate the series truncation estimates through the
        // 1/q and 1/w roots.
        const double lhs_err =
            lhs_q.abs_error_estimate * lhs / (q * std::max(lhs_q.value, 1e-300));
        const double gap = rhs - lhs;
        if (gap > opts.rel_margin * std::max(rhs - 1.0, 0.0) + 32.0 * (lhs_err + rhs_err)) {
            w.n = n;
            w.relaxed_from = lhs;
            w.relaxed_into = rhs;
            w.fn = AnalyticFn::fn_seq(n, gamma);
            certify(w, opts.certificate);
            return w;
        }
    }
    throw std::domain_error("sequence search exhausted without finding a witness");
}

} // namespace

Witness find_witness(const SpaceParams& from, const SpaceParams& into,
                     const WitnessOptions& opts)
{
    const ContractivityResult verdict = contractive(from, into);
    if (!verdict.included)
        throw std::domain_error("no inclusion between the spaces; nothing to witness");
    if (verdict.contractive == Tri::yes)
        throw std::domain_error("embedding is contractive; no witness exists");
    if (verdict.contractive == Tri::unknown_open)
        throw std::domain_error("contractivity undecided for p < u; no construction known");

    if (from.q.is_inf())
        return witness_qinf(from, into, opts);
    return witness_sequence(from, into, opts);
}

WitnessCheck verify_witness(const Witness& w, const NormOptions& opts)
{
    NormOptions forced = opts;
    forced.force_quadrature = true;
    NormResult lhs = mixed_norm(w.fn, w.from, forced);
    NormResult rhs = mixed_norm(w.fn, w.into, forced);

    WitnessCheck check;
    check.from_norm = lhs.value;
    check.into_norm = rhs.value;
    check.gap = rhs.value - lhs.value;
    check.combined_error = lhs.abs_error_estimate + rhs.abs_error_estimate;
    check.valid = !lhs.diverged && !rhs.diverged && std::isfinite(check.gap) &&
                  check.gap > check.combined_error;
    return check;
}

} // namespace mixnorm
