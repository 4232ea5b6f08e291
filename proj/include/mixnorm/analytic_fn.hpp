#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <variant>
#include <vector>

// Analytic function families on the unit disk.  Four closed-form families
// cover everything the norm machinery needs: polynomials, monomials, powers
// (1+z^2)^a with a > 0, and the boundary-singular sequence
// (1 - z^{2n})^{-2 gamma}.

namespace mixnorm {

// An exponent in (0, +inf].  Wraps a double and admits +infinity as a first
// class value; everything else must be positive and finite.
class ExtExponent {
public:
    explicit ExtExponent(double v);
    static ExtExponent infinity();

    bool is_inf() const { return std::isinf(v_); }
    double value() const { return v_; }
    // 1/p with the convention 1/inf = 0.
    double reciprocal() const { return is_inf() ? 0.0 : 1.0 / v_; }

    friend bool operator==(const ExtExponent&, const ExtExponent&) = default;
    friend auto operator<=>(const ExtExponent& a, const ExtExponent& b) { return a.v_ <=> b.v_; }

private:
    double v_;
};

// Accepts a positive decimal or the exact token "inf"; anything else throws
// std::invalid_argument.  Spellings like "Infinity" or "INF" are rejected.
ExtExponent parse_ext_exponent(const std::string& token);
std::string format_ext_exponent(const ExtExponent& e);

struct Polynomial {
    std::vector<std::complex<double>> coeffs; // low to high degree
};

struct Monomial {
    int exponent; // z^exponent, exponent >= 0
};

// (1 + z^2)^power with power > 0; bounded on the closed disk.
struct BinomialPower {
    double power;
};

// (1 - z^{2n})^{-2 gamma} with n >= 1, gamma > 0; singular on the boundary.
struct NegBinomial {
    int n;
    double gamma;
};

class AnalyticFn {
public:
    static AnalyticFn polynomial(std::vector<std::complex<double>> coeffs);
    static AnalyticFn monomial(int exponent);
    static AnalyticFn binomial_power(double power);
    static AnalyticFn fn_seq(int n, double gamma);

    // Closed-form evaluation.  NegBinomial requires |z| < 1 strictly; the
    // bounded families accept |z| <= 1.
    std::complex<double> eval(std::complex<double> z) const;

    // First `count` Taylor coefficients at the origin.
    std::vector<std::complex<double>> taylor_coefficients(int count) const;

    bool is_constant() const;

    int truncation_order() const { return truncation_order_; }
    void set_truncation_order(int order);

    const std::variant<Polynomial, Monomial, BinomialPower, NegBinomial>& node() const {
        return node_;
    }

    std::string describe() const;

private:
    explicit AnalyticFn(std::variant<Polynomial, Monomial, BinomialPower, NegBinomial> node);

    std::variant<Polynomial, Monomial, BinomialPower, NegBinomial> node_;
    int truncation_order_ = 4096;
};

// |f(rho e^{i theta})|^2 parameterized by t = 1 - rho^2.  This is the form
// used by the quadrature kernels: for the boundary-singular family the
// distance to the singularity is carried through expm1/log1p, so radii within
// an ulp of 1 lose no accuracy.  Requires t in (0, 1]; bounded families also
// accept t = 0.
double modulus_sq(const AnalyticFn& f, double one_minus_rho2, double theta);

// Literal grammar: "poly:1,0,2" (real coefficients, low to high),
// "cpoly:(1;0),(0;-2)" (complex coefficients), "mono:4", "binpow:1.5",
// "fnseq:n=3,gamma=0.25".
AnalyticFn parse_function_literal(const std::string& literal);

} // namespace mixnorm
