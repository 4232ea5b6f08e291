#include "mixnorm/analytic_fn.hpp"

#include "mixnorm/specfun.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mixnorm {

namespace {

double parse_plain_double(const std::string& token, const char* who) {
    // Reject alphabetic spellings such as "inf", "nan", "1e3x" up front;
    // from_chars would otherwise accept some of them.
    if (token.empty()) {
        throw std::invalid_argument(std::string(who) + ": empty numeric token");
    }
    for (char c : token) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.' ||
              c == 'e' || c == 'E')) {
            throw std::invalid_argument(std::string(who) + ": bad numeric token '" + token + "'");
        }
    }
    double out = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(std::string(who) + ": bad numeric token '" + token + "'");
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

ExtExponent::ExtExponent(double v) : v_(v) {
    if (std::isnan(v) || !(v > 0.0)) {
        throw std::invalid_argument("ExtExponent: value must be positive (or +inf)");
    }
}

ExtExponent ExtExponent::infinity() {
    return ExtExponent(std::numeric_limits<double>::infinity());
}

ExtExponent parse_ext_exponent(const std::string& token) {
    if (token == "inf") return ExtExponent::infinity();
    return ExtExponent(parse_plain_double(token, "parse_ext_exponent"));
}

std::string format_ext_exponent(const ExtExponent& e) {
    if (e.is_inf()) return "inf";
    std::ostringstream os;
    os.precision(17);
    os << e.value();
    return os.str();
}

AnalyticFn::AnalyticFn(std::variant<Polynomial, Monomial, BinomialPower, NegBinomial> node)
    : node_(std::move(node)) {}

AnalyticFn AnalyticFn::polynomial(std::vector<std::complex<double>> coeffs) {
    return AnalyticFn(Polynomial{std::move(coeffs)});
}

AnalyticFn AnalyticFn::monomial(int exponent) {
    if (exponent < 0) throw std::invalid_argument("AnalyticFn::monomial: exponent must be >= 0");
    return AnalyticFn(Monomial{exponent});
}

AnalyticFn AnalyticFn::binomial_power(double power) {
    if (!(power > 0.0) || !std::isfinite(power)) {
        throw std::invalid_argument("AnalyticFn::binomial_power: power must be positive");
    }
    return AnalyticFn(BinomialPower{power});
}

AnalyticFn AnalyticFn::fn_seq(int n, double gamma) {
    if (n < 1) throw std::invalid_argument("AnalyticFn::fn_seq: n must be >= 1");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("AnalyticFn::fn_seq: gamma must be positive");
    }
    return AnalyticFn(NegBinomial{n, gamma});
}

void AnalyticFn::set_truncation_order(int order) {
    if (order < 1) throw std::invalid_argument("AnalyticFn: truncation order must be >= 1");
    truncation_order_ = order;
}

std::complex<double> AnalyticFn::eval(std::complex<double> z) const {
    const double az = std::abs(z);
    return std::visit(
        [&](const auto& fam) -> std::complex<double> {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                if (az > 1.0 + 1e-12) throw std::domain_error("eval: |z| must be <= 1");
                std::complex<double> acc = 0.0;
                for (auto it = fam.coeffs.rbegin(); it != fam.coeffs.rend(); ++it) {
                    acc = acc * z + *it;
                }
                return acc;
            } else if constexpr (std::is_same_v<T, Monomial>) {
                if (az > 1.0 + 1e-12) throw std::domain_error("eval: |z| must be <= 1");
                return std::pow(z, fam.exponent);
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                if (az > 1.0 + 1e-12) throw std::domain_error("eval: |z| must be <= 1");
                const std::complex<double> w = 1.0 + z * z;
                if (std::abs(w) == 0.0) return 0.0; // zero at z = +-i, power > 0
                return std::exp(fam.power * std::log(w));
            } else {
                if (az >= 1.0) {
                    throw std::domain_error("eval: boundary-singular family requires |z| < 1");
                }
                const std::complex<double> w = 1.0 - std::pow(z, 2 * fam.n);
                return std::exp(-2.0 * fam.gamma * std::log(w));
            }
        },
        node_);
}

std::vector<std::complex<double>> AnalyticFn::taylor_coefficients(int count) const {
    if (count < 0) throw std::invalid_argument("taylor_coefficients: count must be >= 0");
    std::vector<std::complex<double>> out(count, 0.0);
    std::visit(
        [&](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                for (size_t k = 0; k < fam.coeffs.size() && k < out.size(); ++k) {
                    out[k] = fam.coeffs[k];
                }
            } else if constexpr (std::is_same_v<T, Monomial>) {
                if (fam.exponent < count) out[fam.exponent] = 1.0;
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                // (1+w)^a = sum_k binom(a,k) w^k at w = z^2
                double coeff = 1.0;
                for (int k = 0; 2 * k < count; ++k) {
                    if (k > 0) coeff *= (fam.power - (k - 1)) / k;
                    out[2 * k] = coeff;
                }
            } else {
                // (1-w)^{-2 gamma} = sum_k binom_series_coeff(2 gamma, k) w^k at w = z^{2n}
                double coeff = 1.0;
                const double c = 2.0 * fam.gamma;
                for (int k = 0; 2 * fam.n * k < count; ++k) {
                    if (k > 0) coeff *= (c + k - 1) / k;
                    out[2 * fam.n * k] = coeff;
                }
            }
        },
        node_);
    return out;
}

bool AnalyticFn::is_constant() const {
    return std::visit(
        [](const auto& fam) -> bool {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                for (size_t k = 1; k < fam.coeffs.size(); ++k) {
                    if (fam.coeffs[k] != std::complex<double>(0.0)) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, Monomial>) {
                return fam.exponent == 0;
            } else {
                return false;
            }
        },
        node_);
}

double modulus_sq(const AnalyticFn& f, double t, double theta) {
    if (std::isnan(t) || t > 1.0) throw std::domain_error("modulus_sq: t must be in (0, 1]");
    return std::visit(
        [&](const auto& fam) -> double {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                if (t < 0.0) throw std::domain_error("modulus_sq: t must be in (0, 1]");
                const double rho = std::sqrt(1.0 - t);
                const std::complex<double> z = std::polar(rho, theta);
                std::complex<double> acc = 0.0;
                for (auto it = fam.coeffs.rbegin(); it != fam.coeffs.rend(); ++it) {
                    acc = acc * z + *it;
                }
                return std::norm(acc);
            } else if constexpr (std::is_same_v<T, Monomial>) {
                if (t < 0.0) throw std::domain_error("modulus_sq: t must be in (0, 1]");
                if (fam.exponent == 0) return 1.0;
                return std::exp(fam.exponent * std::log1p(-t));
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                if (t < 0.0) throw std::domain_error("modulus_sq: t must be in (0, 1]");
                const double r = 1.0 - t;
                const double c = std::cos(theta);
                // |1+z^2| = hypot(t, 2 sqrt(r) |c|) for z = rho e^{i theta};
                // hypot keeps the squares from underflowing near the zeros.
                const double h = std::hypot(t, 2.0 * std::sqrt(r) * std::abs(c));
                if (h == 0.0) return 0.0;
                return std::pow(h, 2.0 * fam.power);
            } else {
                if (!(t > 0.0)) {
                    throw std::domain_error("modulus_sq: boundary-singular family requires t > 0");
                }
                const double tc = std::max(t, 1e-300);
                const double log_rn = fam.n * std::log1p(-tc);
                const double u = -std::expm1(log_rn); // 1 - r^n, exact for tiny t
                const double rn = std::exp(log_rn);
                const double s = std::sin(fam.n * theta);
                // |1 - r^n e^{2 i n theta}| without squaring u, which would
                // underflow for t below 1e-154 deep in the boundary layer.
                const double h = std::hypot(u, 2.0 * std::sqrt(rn) * std::abs(s));
                return std::pow(h, -4.0 * fam.gamma);
            }
        },
        f.node());
}

std::string AnalyticFn::describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&](const auto& fam) {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, Polynomial>) {
                bool real_only = true;
                for (const auto& c : fam.coeffs) {
                    if (c.imag() != 0.0) real_only = false;
                }
                if (real_only) {
                    os << "poly:";
                    for (size_t k = 0; k < fam.coeffs.size(); ++k) {
                        if (k) os << ",";
                        os << fam.coeffs[k].real();
                    }
                } else {
                    os << "cpoly:";
                    for (size_t k = 0; k < fam.coeffs.size(); ++k) {
                        if (k) os << ",";
                        os << "(" << fam.coeffs[k].real() << ";" << fam.coeffs[k].imag() << ")";
                    }
                }
            } else if constexpr (std::is_same_v<T, Monomial>) {
                os << "mono:" << fam.exponent;
            } else if constexpr (std::is_same_v<T, BinomialPower>) {
                os << "binpow:" << fam.power;
            } else {
                os << "fnseq:n=" << fam.n << ",gamma=" << fam.gamma;
            }
        },
        node_);
    return os.str();
}

AnalyticFn parse_function_literal(const std::string& literal) {
    const auto colon = literal.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("parse_function_literal: expected '<kind>:<args>', got '" +
                                    literal + "'");
    }
    const std::string kind = literal.substr(0, colon);
    const std::string args = literal.substr(colon + 1);
    if (kind == "poly") {
        std::vector<std::complex<double>> coeffs;
        for (const std::string& tok : split(args, ',')) {
            coeffs.emplace_back(parse_plain_double(tok, "parse_function_literal"), 0.0);
        }
        return AnalyticFn::polynomial(std::move(coeffs));
    }
    if (kind == "cpoly") {
        // Complex coefficients spelled "(re;im)", comma separated.
        std::vector<std::complex<double>> coeffs;
        for (const std::string& tok : split(args, ',')) {
            if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') {
                throw std::invalid_argument(
                    "parse_function_literal: cpoly coefficient must look like (re;im)");
            }
            const std::string inner = tok.substr(1, tok.size() - 2);
            const auto semi = inner.find(';');
            if (semi == std::string::npos) {
                throw std::invalid_argument(
                    "parse_function_literal: cpoly coefficient must look like (re;im)");
            }
            coeffs.emplace_back(
                parse_plain_double(inner.substr(0, semi), "parse_function_literal"),
                parse_plain_double(inner.substr(semi + 1), "parse_function_literal"));
        }
        return AnalyticFn::polynomial(std::move(coeffs));
    }
    if (kind == "mono") {
        const double v = parse_plain_double(args, "parse_function_literal");
        const int k = static_cast<int>(v);
        if (k != v || k < 0) {
            throw std::invalid_argument("parse_function_literal: mono exponent must be an integer >= 0");
        }
        return AnalyticFn::monomial(k);
    }
    if (kind == "binpow") {
        return AnalyticFn::binomial_power(parse_plain_double(args, "parse_function_literal"));
    }
    if (kind == "fnseq") {
        int n = -1;
        double gamma = -1.0;
        for (const std::string& tok : split(args, ',')) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("parse_function_literal: fnseq expects n=<int>,gamma=<real>");
            }
            const std::string key = tok.substr(0, eq);
            const std::string val = tok.substr(eq + 1);
            if (key == "n") {
                const double v = parse_plain_double(val, "parse_function_literal");
                n = static_cast<int>(v);
                if (n != v) throw std::invalid_argument("parse_function_literal: fnseq n must be an integer");
            } else if (key == "gamma") {
                gamma = parse_plain_double(val, "parse_function_literal");
            } else {
                throw std::invalid_argument("parse_function_literal: unknown fnseq key '" + key + "'");
            }
        }
        if (n < 1 || !(gamma > 0.0)) {
            throw std::invalid_argument("parse_function_literal: fnseq requires n>=1 and gamma>0");
        }
        return AnalyticFn::fn_seq(n, gamma);
    }
    throw std::invalid_argument("parse_function_literal: unknown kind '" + kind + "'");
}

} // namespace mixnorm
