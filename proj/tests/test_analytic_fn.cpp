#include "doctest.h"

#include "mixnorm/analytic_fn.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace mixnorm;
using cplx = std::complex<double>;

TEST_SUITE("analytic_fn") {

TEST_CASE("exponent parsing accepts only the exact token inf") {
    CHECK(parse_ext_exponent("inf").is_inf());
    CHECK(parse_ext_exponent("2.5").value() == 2.5);
    CHECK_THROWS_AS(parse_ext_exponent("Infinity"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ext_exponent("INF"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ext_exponent("Inf"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ext_exponent("nan"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ext_exponent(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_ext_exponent("-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ext_exponent("0"), std::invalid_argument);
    CHECK(format_ext_exponent(ExtExponent::infinity()) == "inf");
    CHECK(format_ext_exponent(ExtExponent(0.5)) == "0.5");
    CHECK(ExtExponent::infinity().reciprocal() == 0.0);
}

TEST_CASE("function literals parse and round-trip through describe") {
    for (const char* lit : {"poly:1,0,2", "mono:4", "binpow:1.5", "fnseq:n=3,gamma=0.25",
                            "cpoly:(1;0),(0.5;-2)"}) {
        const AnalyticFn f = parse_function_literal(lit);
        const AnalyticFn g = parse_function_literal(f.describe());
        CHECK(f.describe() == g.describe());
    }
    CHECK(parse_function_literal("poly:1,0,2").describe() == "poly:1,0,2");
    CHECK(parse_function_literal("mono:4").describe() == "mono:4");
}

TEST_CASE("malformed literals are rejected") {
    CHECK_THROWS_AS(parse_function_literal("mono:-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("mono:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("fnseq:n=0,gamma=0.25"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("fnseq:n=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("fnseq:n=2,gamma=0.2,x=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("wavelet:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("poly"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("poly:1,inf"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("cpoly:(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function_literal("cpoly:1;2"), std::invalid_argument);
}

TEST_CASE("closed-form evaluation") {
    const AnalyticFn p = parse_function_literal("poly:1,0,2");
    CHECK(p.eval(cplx(0.5, 0.0)) == cplx(1.5, 0.0));

    const AnalyticFn m = AnalyticFn::monomial(3);
    const cplx i(0.0, 1.0);
    CHECK(std::abs(m.eval(i) - cplx(0.0, -1.0)) < 1e-15);

    const AnalyticFn b = AnalyticFn::binomial_power(1.5);
    CHECK(b.eval(cplx(0.0, 0.0)) == cplx(1.0, 0.0));

    const AnalyticFn s = AnalyticFn::fn_seq(1, 0.25);
    // (1 - 0.36)^{-1/2} = 1.25
    CHECK(std::abs(s.eval(cplx(0.6, 0.0)) - cplx(1.25, 0.0)) < 1e-14);
}

TEST_CASE("taylor coefficients of the closed families") {
    const auto binsq = AnalyticFn::binomial_power(2.0).taylor_coefficients(6);
    CHECK(binsq[0] == cplx(1.0));
    CHECK(binsq[1] == cplx(0.0));
    CHECK(binsq[2] == cplx(2.0));
    CHECK(binsq[3] == cplx(0.0));
    CHECK(binsq[4] == cplx(1.0));
    CHECK(binsq[5] == cplx(0.0));

    // (1 - z^2)^{-1} = 1 + z^2 + z^4 + ...
    const auto geo = AnalyticFn::fn_seq(1, 0.5).taylor_coefficients(7);
    for (int k = 0; k < 7; ++k) {
        const double expect = k % 2 == 0 ? 1.0 : 0.0;
        CHECK(std::abs(geo[k] - cplx(expect)) < 1e-14);
    }

    const auto mono = AnalyticFn::monomial(4).taylor_coefficients(6);
    CHECK(mono[4] == cplx(1.0));
    CHECK(mono[3] == cplx(0.0));
}

TEST_CASE("is_constant") {
    CHECK(parse_function_literal("poly:3").is_constant());
    CHECK(parse_function_literal("poly:3,0,0").is_constant());
    CHECK(parse_function_literal("mono:0").is_constant());
    CHECK_FALSE(parse_function_literal("poly:0,1").is_constant());
    CHECK_FALSE(parse_function_literal("mono:2").is_constant());
    CHECK_FALSE(AnalyticFn::binomial_power(1.0).is_constant());
    CHECK_FALSE(AnalyticFn::fn_seq(1, 0.1).is_constant());
}

TEST_CASE("modulus_sq stays accurate within an ulp of the boundary") {
    // At theta = 0 and t = 1 - rho^2, the singular factor is exactly
    // |1 - rho^2|^{-4 gamma} for n = 1, so modulus_sq must reproduce
    // t^{-4 gamma} even at t = 1e-300.
    const AnalyticFn s = AnalyticFn::fn_seq(1, 0.25);
    for (double t : {1e-4, 1e-16, 1e-100, 1e-300}) {
        const double got = modulus_sq(s, t, 0.0);
        CHECK(std::isfinite(got));
        CHECK(got == doctest::Approx(std::pow(t, -1.0)).epsilon(1e-12));
    }

    // Bounded family right on the boundary.
    const AnalyticFn b = AnalyticFn::binomial_power(2.0);
    CHECK(modulus_sq(b, 0.0, 0.0) == doctest::Approx(16.0).epsilon(1e-13));
    CHECK(modulus_sq(b, 0.0, M_PI / 2.0) == doctest::Approx(0.0).epsilon(1e-13));

    // Polynomial cross-check against direct evaluation.
    const AnalyticFn p = parse_function_literal("poly:1,2,0,1");
    const double t = 0.19;
    const double rho = std::sqrt(1.0 - t);
    const cplx z = rho * std::exp(cplx(0.0, 1.1));
    const double direct = std::norm(p.eval(z));
    CHECK(modulus_sq(p, t, 1.1) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("truncation order is clamped to sane values") {
    AnalyticFn s = AnalyticFn::fn_seq(2, 0.3);
    s.set_truncation_order(128);
    CHECK(s.truncation_order() == 128);
    CHECK_THROWS_AS(s.set_truncation_order(0), std::invalid_argument);
}

} // TEST_SUITE
