#include "doctest.h"

#include "mixnorm/classify.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace mixnorm;

namespace {

SpaceParams sp(double p, double q, double a)
{
    const ExtExponent pe = std::isinf(p) ? ExtExponent::infinity() : ExtExponent(p);
    const ExtExponent qe = std::isinf(q) ? ExtExponent::infinity() : ExtExponent(q);
    return SpaceParams{pe, qe, a};
}

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

TEST_SUITE("classify") {

TEST_CASE("inclusion in the p >= u regime") {
    CHECK(inclusion(sp(3, 4, 1), sp(2, 2, 1.5)).included == Tri::yes);
    CHECK(inclusion(sp(3, 4, 1), sp(2, 2, 1.5)).rule == "ThmA:a<b");
    CHECK(inclusion(sp(4, 2, 1), sp(2, 3, 1)).rule == "ThmA:a=b,q<=v");
    CHECK(inclusion(sp(4, 3, 1), sp(2, 2, 1)).included == Tri::no);
    CHECK(inclusion(sp(2, 2, 1), sp(2, 2, 1)).rule == "identity");
    CHECK(inclusion(sp(kInf, 2, 1), sp(2, 1, 1.5)).included == Tri::yes);
}

TEST_CASE("inclusion in the p < u regime uses the integrability indices") {
    // a + 1/p vs b + 1/u.
    CHECK(inclusion(sp(1, 2, 1), sp(3, 2, 1)).included == Tri::no);
    CHECK(inclusion(sp(1, 2, 1), sp(3, 2, 1)).rule == "ThmB:none");
    CHECK(inclusion(sp(1, 2, 1), sp(3, 2, 2)).rule == "ThmB:strict");
    // Equality boundary: decided by q <= v.
    CHECK(inclusion(sp(1, 2, 1), sp(2, 2, 1.5)).rule == "ThmB:boundary");
    CHECK(inclusion(sp(1, 2, 1), sp(2, 1, 1.5)).included == Tri::no);
    // p finite into p = inf: 1/u = 0, so the indices are 1.5 on both sides.
    CHECK(inclusion(sp(2, 2, 1), sp(kInf, 2, 1.5)).rule == "ThmB:boundary");
    CHECK(inclusion(sp(2, 2, 1), sp(kInf, 2, 2)).rule == "ThmB:strict");
}

TEST_CASE("contractivity matches the sharp two-case criterion") {
    ContractivityResult r = contractive(sp(4, 2, 1), sp(2, 3, 1));
    CHECK(r.contractive == Tri::yes);
    CHECK(r.rule == "Thm2.5:case1");
    CHECK(r.included);

    r = contractive(sp(3, 4, 1), sp(2, 2, 1.5));
    CHECK(r.contractive == Tri::no);
    CHECK(r.rule == "Thm2.5:no");
    CHECK(r.included);

    // Case 2: q > v but a q <= b v.
    r = contractive(sp(4, 4, 0.5), sp(2, 2, 1.5));
    CHECK(r.contractive == Tri::yes);
    CHECK(r.rule == "Thm2.5:case2");

    // No inclusion at all.
    r = contractive(sp(1, 2, 1), sp(3, 2, 1));
    CHECK(r.contractive == Tri::no);
    CHECK(r.rule == "no-inclusion");
    CHECK_FALSE(r.included);

    // Included with p < u: sharp constant unknown.
    r = contractive(sp(1, 2, 1), sp(3, 2, 2));
    CHECK(r.contractive == Tri::unknown_open);
    CHECK(r.rule == "open:p<u");
    CHECK(r.included);

    CHECK(contractive(sp(2, 2, 1), sp(2, 2, 1)).rule == "identity");
}

TEST_CASE("infinite q and v follow the natural conventions") {
    // q = inf <= v = inf: case 1 applies.
    CHECK(contractive(sp(2, kInf, 1), sp(2, kInf, 2)).contractive == Tri::yes);
    // q = inf > finite v: a q is infinite, never contractive.
    CHECK(contractive(sp(2, kInf, 1), sp(2, 2, 1.5)).contractive == Tri::no);
    // Finite q <= v = inf: case 1.
    CHECK(contractive(sp(2, 2, 1), sp(2, kInf, 2)).contractive == Tri::yes);
}

TEST_CASE("exhaustive cross-check against the hand predicate") {
    const std::vector<double> ps = {0.5, 1, 2, kInf};
    const std::vector<double> qs = {0.5, 1, 2, 3, kInf};
    const std::vector<double> as = {0.25, 0.5, 1, 2};
    long checked = 0;
    for (double p : ps)
        for (double u : ps) {
            if (p < u)
                continue;
            for (double q : qs)
                for (double v : qs)
                    for (double a : as)
                        for (double b : as) {
                            const SpaceParams from = sp(p, q, a);
                            const SpaceParams into = sp(u, v, b);
                            const bool inc = a < b || (a == b && q <= v);
                            const bool con =
                                inc && ((q <= v && a <= b) || (q > v && a * q <= b * v));
                            const InclusionResult ir = inclusion(from, into);
                            const ContractivityResult cr = contractive(from, into);
                            REQUIRE((ir.included == Tri::yes) == inc);
                            REQUIRE((cr.contractive == Tri::yes) == con);
                            REQUIRE(cr.contractive != Tri::unknown_open);
                            ++checked;
                        }
        }
    CHECK(checked == 4000);
}

TEST_CASE("Bergman specialization") {
    // A^4_0 -> A^2_1: spaces (4,4,1/4) -> (2,2,1); q > v with aq = 1 <= bv = 2.
    const ContractivityResult r = bergman_contractive(4.0, 0.0, 2.0, 1.0);
    CHECK(r.contractive == Tri::yes);
    CHECK(r.rule == "Thm2.5:case2");
    CHECK(bergman_contractive(2.0, 0.0, 2.0, 1.0).contractive == Tri::yes);
    CHECK(bergman_contractive(2.0, 1.0, 2.0, 0.0).contractive == Tri::no);
    CHECK_THROWS_AS(bergman_contractive(2.0, -1.0, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bergman_contractive(0.0, 0.0, 2.0, 0.0), std::domain_error);
}

} // TEST_SUITE
