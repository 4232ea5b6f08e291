#include "mixnorm/integral_means.hpp"

#include "mixnorm/quadrature.hpp"
#include "mixnorm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mixnorm {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Kahan {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double ipow(double x, long e) {
    double acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= x;
        x *= x;
        e >>= 1;
    }
    return acc;
}

// |f|^p from |f|^2 without a pow call for integer and half-integer p/2.
double pow_half(double base_sq, double p) {
    if (base_sq <= 0.0) return 0.0;
    const double h = 0.5 * p;
    const double fl = std::floor(h);
    if (h == fl && h <= 32.0) return ipow(base_sq, static_cast<long>(h));
    if (h - fl == 0.5 && h < 32.0)
        return ipow(base_sq, static_cast<long>(fl)) * std::sqrt(base_sq);
    if (h == 0.25) return std::sqrt(std::sqrt(base_sq));
    return std::pow(base_sq, h);
}

void validate_t(const AnalyticFn& f, double t) {
    if (std::isnan(t) || t > 1.0 || t < 0.0) {
        throw std::domain_error("integral_mean: t = 1 - rho^2 must lie in [0, 1]");
    }
    if (t == 0.0 && std::holds_alternative<NegBinomial>(f.node())) {
        throw std::domain_error("integral_mean: boundary-singular family requires radius < 1");
    }
}

MeanResult exact_mean(double value) {
    MeanResult res;
    res.value = value;
    res.abs_error_estimate = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
    res.n_samples = 0;
    res.converged = true;
    return res;
}

// Symmetry-reduced adaptive mean for the boundary-singular family: the
// integrand has period pi/n and a smooth Lorentzian-like peak of width about
// (1 - r^n)/n at theta = 0.  Uniform sampling under-resolves that peak near
// the boundary, so we integrate [0, pi/n] adaptively instead.
MeanResult adaptive_arc_mean(const AnalyticFn& f, double p, double t, double period,
                             int max_depth, const MeanOptions& opts) {
    QuadOptions qopts;
    qopts.rel_tol = opts.rel_tol;
    qopts.max_depth = max_depth;
    const auto g = [&](double theta) { return pow_half(modulus_sq(f, t, theta), p); };
    const QuadResult q = adaptive_gauss_legendre(g, 0.0, period, qopts);
    MeanResult res;
    const double power_mean = q.value / period;
    res.value = power_mean > 0.0 ? std::pow(power_mean, 1.0 / p) : 0.0;
    res.abs_error_estimate =
        (q.abs_error / period) / (p * std::max(power_mean, 1e-300)) * res.value;
    res.n_samples = q.n_evals;
    res.converged = q.converged;
    return res;
}

// Boundary-singular family: |f| depends on theta only through cos(2n theta),
// so it is even about both 0 and pi/(2n) and the mean over [0, pi/(2n)]
// equals the full-circle mean.  Integrating the half period matters beyond
// economy: it keeps the only singular peak at theta = 0, where the offset
// from the peak is an exact floating-point quantity.  A mirror peak at
// pi/n would sit at a theta whose neighbourhood is quantised at machine
// epsilon absolute, and panels there can never resolve a peak narrower
// than that.
MeanResult neg_binomial_mean(const AnalyticFn& f, const NegBinomial& fam, double p, double t,
                             const MeanOptions& opts) {
    return adaptive_arc_mean(f, p, t, kPi / (2.0 * fam.n), 200, opts);
}

// Even integer p: |f|^p = |f^{p/2}|^2 with f^{p/2} still a polynomial, so
// the mean is an exact finite coefficient sum (p = 2 is plain Parseval).
MeanResult poly_even_power_mean(const Polynomial& poly, long half, double t) {
    std::vector<std::complex<double>> g{{1.0, 0.0}};
    for (long rep = 0; rep < half; ++rep) {
        std::vector<std::complex<double>> next(g.size() + poly.coeffs.size() - 1,
                                               {0.0, 0.0});
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = 0; j < poly.coeffs.size(); ++j)
                next[i + j] += g[i] * poly.coeffs[j];
        g = std::move(next);
    }
    const double x = 1.0 - t; // rho^2
    Kahan acc;
    double xk = 1.0;
    long n_terms = 0;
    for (const auto& gk : g) {
        acc.add(std::norm(gk) * xk);
        xk *= x;
        ++n_terms;
    }
    MeanResult res;
    res.value = acc.sum > 0.0 ? std::pow(acc.sum, 0.5 / half) : 0.0;
    res.abs_error_estimate = 16.0 * std::numeric_limits<double>::epsilon() * res.value;
    res.n_samples = n_terms;
    return res;
}

} // namespace

MeanResult circle_mean_trapezoid(const AnalyticFn& f, double p, double t,
                                 const MeanOptions& opts) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw std::domain_error("circle_mean_trapezoid: p must be positive and finite");
    }
    validate_t(f, t);

    long n = 64;
    Kahan acc;
    for (long j = 0; j < n; ++j) {
        acc.add(pow_half(modulus_sq(f, t, 2.0 * kPi * j / n), p));
    }
    double mean = std::pow(acc.sum / n, 1.0 / p);

    MeanResult res;
    while (n < opts.max_samples) {
        for (long j = 0; j < n; ++j) {
            acc.add(pow_half(modulus_sq(f, t, 2.0 * kPi * (j + 0.5) / n), p));
        }
        n *= 2;
        const double next = acc.sum > 0.0 ? std::pow(acc.sum / n, 1.0 / p) : 0.0;
        const double change = std::abs(next - mean);
        mean = next;
        if (change <= opts.rel_tol * std::max(mean, 1e-300) || (acc.sum == 0.0 && n >= 256)) {
            res.value = mean;
            res.abs_error_estimate = change;
            res.n_samples = n;
            res.converged = true;
            return res;
        }
        res.abs_error_estimate = change;
    }
    res.value = mean;
    res.n_samples = n;
    res.converged = false; // sample cap reached; best value reported
    return res;
}

MeanResult circle_mean_adaptive(const AnalyticFn& f, double p, double t,
                                const MeanOptions& opts) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw std::domain_error("circle_mean_adaptive: p must be positive and finite");
    }
    validate_t(f, t);
    return adaptive_arc_mean(f, p, t, 2.0 * kPi, 100, opts);
}

MeanResult circle_mean_parseval(const AnalyticFn& f, double t, const MeanOptions& opts) {
    (void)opts; // coefficient sums terminate on their own scale, not a tolerance
    validate_t(f, t);
    const double x = 1.0 - t; // rho^2

    MeanResult res;
    if (const auto* poly = std::get_if<Polynomial>(&f.node())) {
        Kahan acc;
        double xk = 1.0;
        for (size_t k = 0; k < poly->coeffs.size(); ++k) {
            acc.add(std::norm(poly->coeffs[k]) * xk);
            xk *= x;
        }
        res.value = std::sqrt(acc.sum);
        res.abs_error_estimate = 8.0 * std::numeric_limits<double>::epsilon() * res.value;
        res.n_samples = static_cast<long>(poly->coeffs.size());
        return res;
    }
    if (const auto* mono = std::get_if<Monomial>(&f.node())) {
        return exact_mean(t < 1.0 ? std::exp(0.5 * mono->exponent * std::log1p(-t))
                                  : (mono->exponent == 0 ? 1.0 : 0.0));
    }

    // Infinite coefficient families: terms u_k = c_k^2 * x^{stride*k} with a
    // known power-law coefficient asymptotic.  Sum until the terms are
    // negligible, then add an Euler-Maclaurin tail for the power-law part.
    double coeff = 1.0; // current series coefficient
    double sigma;       // asymptotic exponent of u_k at x = 1
    double x_stride;    // geometric factor per index step
    bool binpow = false;
    int n_stride = 1;
    if (const auto* bp = std::get_if<BinomialPower>(&f.node())) {
        binpow = true;
        sigma = -2.0 * (bp->power + 1.0);
        x_stride = x * x;
    } else {
        const auto& nb = std::get<NegBinomial>(f.node());
        n_stride = nb.n;
        sigma = 2.0 * (2.0 * nb.gamma - 1.0);
        x_stride = std::exp(2.0 * nb.n * std::log1p(-t));
    }

    Kahan acc;
    acc.add(1.0); // k = 0 term for both families
    const long cap = std::max(f.truncation_order(), 1 << 15);
    double u_prev = 1.0;
    double u_k = 0.0;
    double xk = 1.0;
    long k = 0;
    const double a_or_c = binpow ? std::get<BinomialPower>(f.node()).power
                                 : 2.0 * std::get<NegBinomial>(f.node()).gamma;
    for (k = 1; k <= cap; ++k) {
        coeff *= binpow ? (a_or_c - (k - 1)) / k : (a_or_c + k - 1) / k;
        xk *= x_stride;
        u_k = coeff * coeff * xk;
        if (!std::isfinite(u_k)) break;
        acc.add(u_k);
        if (u_k < 1e-17 * acc.sum && k >= 32) break;
        u_prev = u_k;
    }
    double tail_correction = 0.0;
    double residual = 0.0;
    if (u_k >= 1e-17 * acc.sum && k > 1) {
        // Cap reached with non-negligible terms.  If x is essentially 1 the
        // decay is the pure power law u_k ~ C k^sigma; otherwise continue the
        // geometric estimate from the last ratio.
        const double last_ratio = u_prev > 0.0 ? u_k / u_prev : 0.0;
        const double em_tail = (sigma < -1.0 && x_stride > 0.999999)
                                   ? u_k * std::pow(1.0 + 0.5 / k, sigma + 1.0) * k / (-sigma - 1.0)
                                   : std::numeric_limits<double>::infinity();
        const double geom_tail = last_ratio < 0.999 ? u_k * last_ratio / (1.0 - last_ratio)
                                                    : std::numeric_limits<double>::infinity();
        tail_correction = std::min(em_tail, geom_tail);
        if (!std::isfinite(tail_correction)) {
            tail_correction = 0.0;
            residual = std::max(u_k * static_cast<double>(k), u_k);
        } else {
            residual = std::min(em_tail, geom_tail) == em_tail
                           ? 12.0 * u_k * (1.0 + std::abs(sigma))
                           : u_k;
        }
    }
    const double total = acc.sum + tail_correction;
    res.value = std::sqrt(total);
    res.abs_error_estimate = residual / (2.0 * std::max(res.value, 1e-300)) +
                             8.0 * std::numeric_limits<double>::epsilon() * res.value;
    res.n_samples = k * n_stride;
    return res;
}

MeanResult circle_sup(const AnalyticFn& f, double t, const MeanOptions&) {
    validate_t(f, t);

    // Period and sample count by family; theta = 0 always lies on the grid,
    // which pins the exact peak location of the closed-form families.
    double period = 2.0 * kPi;
    long n = 4096;
    if (const auto* nb = std::get_if<NegBinomial>(&f.node())) {
        period = kPi / nb->n;
        n = 512;
    }

    long best_j = 0;
    double best = -1.0;
    for (long j = 0; j < n; ++j) {
        const double v = modulus_sq(f, t, period * j / n);
        if (v > best) {
            best = v;
            best_j = j;
        }
    }

    // Golden-section refinement of the bracketing cell pair.
    const double h = period / n;
    double lo = period * best_j / n - h;
    double hi = period * best_j / n + h;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = modulus_sq(f, t, x1);
    double f2 = modulus_sq(f, t, x2);
    long iters = 0;
    for (; iters < 80 && (hi - lo) > 1e-14 * period; ++iters) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = modulus_sq(f, t, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = modulus_sq(f, t, x1);
        }
    }
    const double refined = std::max({best, f1, f2});

    MeanResult res;
    res.value = std::sqrt(refined);
    res.abs_error_estimate = (std::sqrt(refined) - std::sqrt(best)) +
                             8.0 * std::numeric_limits<double>::epsilon() * res.value;
    res.n_samples = n + iters + 2;
    return res;
}

MeanResult integral_mean_from_t(const AnalyticFn& f, ExtExponent p, double t,
                                const MeanOptions& opts) {
    validate_t(f, t);

    if (t == 1.0) return exact_mean(std::abs(f.eval(0.0))); // radius 0

    if (!opts.force_quadrature) {
        if (const auto* mono = std::get_if<Monomial>(&f.node())) {
            // |z^k| is constant on circles: every mean equals rho^k.
            return exact_mean(std::exp(0.5 * mono->exponent * std::log1p(-t)));
        }
        if (f.is_constant()) return exact_mean(std::abs(f.eval(0.0)));
    }

    if (p.is_inf()) return circle_sup(f, t, opts);
    const double pv = p.value();

    // The coefficient sums of the infinite families decay like
    // exp(-lambda k) with lambda = -2 n log(1-t); close to the boundary that
    // cutoff exceeds any reasonable truncation, so only use them when the
    // cutoff falls well inside the cap.
    const auto parseval_converges = [&](int n_stride) {
        const double lambda = -2.0 * n_stride * std::log1p(-t);
        return lambda * 16384.0 >= 30.0;
    };

    if (const auto* nb = std::get_if<NegBinomial>(&f.node())) {
        if (pv == 2.0 && !opts.force_quadrature && parseval_converges(nb->n))
            return circle_mean_parseval(f, t, opts);
        return neg_binomial_mean(f, *nb, pv, t, opts);
    }

    if (!opts.force_quadrature) {
        if (const auto* poly = std::get_if<Polynomial>(&f.node())) {
            const double half = 0.5 * pv;
            if (half == std::floor(half) && half <= 64.0)
                return poly_even_power_mean(*poly, static_cast<long>(half), t);
        }
        if (pv == 2.0 && parseval_converges(1)) return circle_mean_parseval(f, t, opts);
    }
    // Fractional powers of |f|^2 are only piecewise smooth where f has zeros
    // near the circle; the adaptive rule resolves those spots locally, where
    // a uniform (trapezoidal) grid would need a prohibitive global density.
    // The binomial power depends on theta through cos(2 theta) only, so its
    // quarter arc already carries the full mean.
    if (std::holds_alternative<BinomialPower>(f.node()))
        return adaptive_arc_mean(f, pv, t, 0.5 * kPi, 100, opts);
    return adaptive_arc_mean(f, pv, t, 2.0 * kPi, 100, opts);
}

MeanResult integral_mean(const AnalyticFn& f, ExtExponent p, double radius,
                         const MeanOptions& opts) {
    if (std::isnan(radius) || radius < 0.0 || radius > 1.0) {
        throw std::domain_error("integral_mean: radius must lie in [0, 1]");
    }
    const double t = (1.0 - radius) * (1.0 + radius);
    return integral_mean_from_t(f, p, t, opts);
}

double m_small(const AnalyticFn& f, ExtExponent p, double r, const MeanOptions& opts) {
    if (std::isnan(r) || r < 0.0 || r > 1.0) {
        throw std::domain_error("m_small: r must lie in [0, 1]");
    }
    return integral_mean_from_t(f, p, 1.0 - r, opts).value;
}

} // namespace mixnorm
