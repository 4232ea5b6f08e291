#include "mixnorm/probe.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

namespace mixnorm {

namespace {

double uniform_unit(std::mt19937_64& rng)
{
    // Top 53 bits -> [0, 1); fixed mapping instead of
    // std::uniform_real_distribution, whose output is unspecified.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_pm1(std::mt19937_64& rng)
{
    return 2.0 * uniform_unit(rng) - 1.0;
}

MarginReport compare(const NormResult& smaller, const NormResult& larger)
{
    MarginReport r;
    r.smaller = smaller.value;
    r.larger = larger.value;
    r.margin = larger.value - smaller.value;
    r.combined_error = smaller.abs_error_estimate + larger.abs_error_estimate;
    r.candidate_violation = r.margin < -r.combined_error;
    return r;
}

MarginReport probe_cell(const AnalyticFn& f, Conjecture c, const ProbeCell& cell,
                        const NormOptions& opts)
{
    switch (c) {
    case Conjecture::eq14: return probe_contract(f, cell.c, cell.q, cell.p, opts);
    case Conjecture::eq15: return probe_contract(f, cell.alpha + 0.5, 2.0, cell.p, opts);
    case Conjecture::eq16: return probe_hardy(f, cell.c, cell.p, opts);
    case Conjecture::eq17: return probe_hardy(f, 0.5, cell.p, opts);
    }
    throw std::logic_error("unreachable conjecture");
}

} // namespace

std::vector<AnalyticFn> random_polynomial_corpus(const CorpusSpec& spec)
{
    if (spec.count < 0 || spec.max_degree < 0)
        throw std::domain_error("corpus count and degree bound must be nonnegative");
    std::mt19937_64 rng(spec.seed);
    std::vector<AnalyticFn> corpus;
    corpus.reserve(static_cast<size_t>(spec.count));
    for (long i = 0; i < spec.count; ++i) {
        const int degree =
            static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_degree + 1));
        std::vector<std::complex<double>> coeffs(degree + 1);
        for (auto& ck : coeffs) {
            const double re = uniform_pm1(rng);
            const double im = uniform_pm1(rng);
            ck = {re, im};
        }
        corpus.push_back(AnalyticFn::polynomial(std::move(coeffs)));
    }
    return corpus;
}

MarginReport probe_contract(const AnalyticFn& f, double c, double q, double p,
                            const NormOptions& opts)
{
    if (!(c > 0.0))
        throw std::domain_error("c must be positive");
    if (!(1.0 / c < q) || !(q < p) || std::isinf(p))
        throw std::domain_error("need 1/c < q < p < inf");
    // cq - 2 > -1 is equivalent to q > 1/c, so both weights are valid here.
    NormResult small_side = bergman_norm(f, p, c * p - 2.0, opts);
    NormResult large_side = bergman_norm(f, q, c * q - 2.0, opts);
    return compare(small_side, large_side);
}

MarginReport probe_hardy(const AnalyticFn& f, double c, double p, const NormOptions& opts)
{
    if (!(c > 0.0))
        throw std::domain_error("c must be positive");
    if (!(p > 1.0 / c) || std::isinf(p))
        throw std::domain_error("need 1/c < p < inf");
    NormResult small_side = bergman_norm(f, p, c * p - 2.0, opts);
    NormResult large_side = hardy_norm(f, ExtExponent(1.0 / c), opts);
    return compare(small_side, large_side);
}

const char* to_string(Conjecture c)
{
    switch (c) {
    case Conjecture::eq14: return "eq14";
    case Conjecture::eq15: return "eq15";
    case Conjecture::eq16: return "eq16";
    case Conjecture::eq17: return "eq17";
    }
    return "?";
}

Conjecture conjecture_from_string(const std::string& name)
{
    if (name == "eq14") return Conjecture::eq14;
    if (name == "eq15") return Conjecture::eq15;
    if (name == "eq16") return Conjecture::eq16;
    if (name == "eq17") return Conjecture::eq17;
    throw std::invalid_argument("unknown conjecture: " + name);
}

SweepGrid SweepGrid::default_for(Conjecture c)
{
    SweepGrid g;
    switch (c) {
    case Conjecture::eq14:
        g.cells = {{0.75, 2.0, 4.0, 0.0}, {1.5, 2.0, 4.0, 0.0}, {0.75, 2.0, 6.0, 0.0}};
        break;
    case Conjecture::eq15:
        g.cells = {{0.0, 0.0, 2.5, 0.75}, {0.0, 0.0, 3.0, 0.75},
                   {0.0, 0.0, 2.5, 1.0}, {0.0, 0.0, 3.0, 1.0}};
        break;
    case Conjecture::eq16:
        g.cells = {{0.75, 0.0, 1.5, 0.0}, {0.75, 0.0, 2.0, 0.0},
                   {0.75, 0.0, 3.0, 0.0}, {0.75, 0.0, 5.0, 0.0}};
        break;
    case Conjecture::eq17:
        g.cells = {{0.0, 0.0, 3.0, 0.0}, {0.0, 0.0, 4.0, 0.0},
                   {0.0, 0.0, 6.0, 0.0}, {0.0, 0.0, 8.0, 0.0}};
        break;
    }
    return g;
}

NormOptions sweep_norm_options()
{
    NormOptions opts;
    opts.radial_rel_tol = 1e-8;
    opts.mean.rel_tol = 1e-9;
    return opts;
}

SweepSummary probe_sweep(const CorpusSpec& corpus_spec, Conjecture conjecture,
                         const SweepGrid& grid, const NormOptions& opts,
                         std::ostream* csv)
{
    const SweepGrid& g = grid.cells.empty() ? SweepGrid::default_for(conjecture) : grid;
    const std::vector<AnalyticFn> corpus = random_polynomial_corpus(corpus_spec);

    SweepSummary out;
    out.conjecture = conjecture;
    out.corpus = corpus_spec;
    out.cells = static_cast<long>(g.cells.size());
    out.min_margin = std::numeric_limits<double>::infinity();

    if (csv)
        *csv << "index,fn,c,q,p,alpha,margin,combined_error\n";

    for (long i = 0; i < static_cast<long>(corpus.size()); ++i) {
        for (const ProbeCell& cell : g.cells) {
            const MarginReport r = probe_cell(corpus[i], conjecture, cell, opts);
            ++out.samples;
            if (r.margin < out.min_margin) {
                out.min_margin = r.margin;
                out.argmin_index = i;
                out.argmin_fn = corpus[i].describe();
                out.argmin_cell = cell;
            }
            if (r.candidate_violation)
                out.violations.push_back(
                    {i, corpus[i].describe(), cell, r.margin, r.combined_error});
            if (csv)
                *csv << i << ",\"" << corpus[i].describe() << "\"," << cell.c << ','
                     << cell.q << ',' << cell.p << ',' << cell.alpha << ','
                     << r.margin << ',' << r.combined_error << '\n';
        }
    }
    if (out.samples == 0)
        out.min_margin = 0.0;
    return out;
}

} // namespace mixnorm
