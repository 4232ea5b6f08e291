#include "mixnorm/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace mixnorm {

const char* to_string(Tri t)
{
    switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown_open: return "unknown_open";
    }
    return "?";
}

InclusionResult inclusion(const SpaceParams& from, const SpaceParams& into)
{
    if (from == into)
        return {Tri::yes, "identity"};

    const double p = from.p.value();
    const double q = from.q.value();
    const double a = from.a;
    const double u = into.p.value();
    const double v = into.q.value();
    const double b = into.a;

    if (p >= u) {
        if (a < b)
            return {Tri::yes, "ThmA:a<b"};
        if (a == b && q <= v)
            return {Tri::yes, "ThmA:a=b,q<=v"};
        return {Tri::no, "ThmA:none"};
    }
    // p < u: the integrability indices a + 1/p and b + 1/u take over.
    const double lhs = a + from.p.reciprocal();
    const double rhs = b + into.p.reciprocal();
    if (lhs < rhs)
        return {Tri::yes, "ThmB:strict"};
    if (lhs == rhs && q <= v)
        return {Tri::yes, "ThmB:boundary"};
    return {Tri::no, "ThmB:none"};
}

ContractivityResult contractive(const SpaceParams& from, const SpaceParams& into)
{
    ContractivityResult out;
    const InclusionResult inc = inclusion(from, into);
    out.included = inc.included == Tri::yes;
    if (!out.included) {
        out.contractive = Tri::no;
        out.rule = "no-inclusion";
        return out;
    }
    if (from == into) {
        out.contractive = Tri::yes;
        out.rule = "identity";
        return out;
    }

    const double p = from.p.value();
    const double q = from.q.value();
    const double a = from.a;
    const double u = into.p.value();
    const double v = into.q.value();
    const double b = into.a;

    if (p < u) {
        // The inclusion holds but no sharp norm bound is known here.
        out.contractive = Tri::unknown_open;
        out.rule = "open:p<u";
        return out;
    }
    if (q <= v) {
        if (a <= b) {
            out.contractive = Tri::yes;
            out.rule = "Thm2.5:case1";
            return out;
        }
    } else if (a * q <= b * v) {
        out.contractive = Tri::yes;
        out.rule = "Thm2.5:case2";
        return out;
    }
    out.contractive = Tri::no;
    out.rule = "Thm2.5:no";
    return out;
}

ContractivityResult bergman_contractive(double p, double alpha, double q, double beta)
{
    if (!(p > 0.0) || !(q > 0.0) || std::isinf(p) || std::isinf(q))
        throw std::domain_error("Bergman exponents must be positive and finite");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("Bergman weights must exceed -1");
    SpaceParams from{ExtExponent(p), ExtExponent(p), (alpha + 1.0) / p};
    SpaceParams into{ExtExponent(q), ExtExponent(q), (beta + 1.0) / q};
    return contractive(from, into);
}

} // namespace mixnorm
