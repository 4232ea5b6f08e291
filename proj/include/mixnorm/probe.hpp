#pragma once

#include "mixnorm/norms.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Numerical stress tests for the open contractive inequalities in the
// regime the classifier refuses to decide.  Everything here is report-only:
// a negative margin beyond its error bar is recorded as a candidate
// violation of an open conjecture, never asserted.
//
// The four conjectured families, with c > 0:
//
//   eq14: ||f||_{A^p_{cp-2}} <= ||f||_{A^q_{cq-2}},   1/c < q < p < inf
//   eq15: eq14 at c = alpha + 1/2, q = 2,             2 <= p, alpha > 0
//   eq16: ||f||_{A^p_{cp-2}} <= ||f||_{H^{1/c}},      1/c < p < inf
//   eq17: eq16 at c = 1/2,                            2 < p < inf

namespace mixnorm {

struct CorpusSpec {
    long count = 1000;
    int max_degree = 32;
    std::uint64_t seed = 7;
};

// Deterministic corpus: degree uniform in {0, ..., max_degree}, then
// degree+1 complex coefficients with real and imaginary parts uniform in
// [-1, 1].  The generator is mt19937_64 and the uniform mapping is the
// explicit (x >> 11) * 2^-53, so the corpus is reproducible across
// platforms and standard library versions.
std::vector<AnalyticFn> random_polynomial_corpus(const CorpusSpec& spec);

struct MarginReport {
    double smaller = 0.0; // conjecturally smaller norm
    double larger = 0.0;  // conjecturally larger norm
    double margin = 0.0;  // larger - smaller; negative would contradict
    double combined_error = 0.0;
    bool candidate_violation = false; // margin < -combined_error
};

// eq14 pointwise: margin = ||f||_{A^q_{cq-2}} - ||f||_{A^p_{cp-2}}.
MarginReport probe_contract(const AnalyticFn& f, double c, double q, double p,
                            const NormOptions& opts = {});

// eq16 pointwise: margin = ||f||_{H^{1/c}} - ||f||_{A^p_{cp-2}}.
MarginReport probe_hardy(const AnalyticFn& f, double c, double p,
                         const NormOptions& opts = {});

enum class Conjecture { eq14, eq15, eq16, eq17 };

const char* to_string(Conjecture c);
Conjecture conjecture_from_string(const std::string& name);

// One grid cell; which fields matter depends on the conjecture
// (eq14: c,q,p; eq15: alpha,p; eq16: c,p; eq17: p).
struct ProbeCell {
    double c = 0.0;
    double q = 0.0;
    double p = 0.0;
    double alpha = 0.0;
};

struct SweepGrid {
    std::vector<ProbeCell> cells;
    static SweepGrid default_for(Conjecture c);
};

struct ViolationRecord {
    long corpus_index = -1;
    std::string fn;
    ProbeCell cell;
    double margin = 0.0;
    double combined_error = 0.0;
};

struct SweepSummary {
    Conjecture conjecture = Conjecture::eq17;
    CorpusSpec corpus;
    long cells = 0;
    long samples = 0;
    double min_margin = 0.0;
    long argmin_index = -1;
    std::string argmin_fn;
    ProbeCell argmin_cell;
    std::vector<ViolationRecord> violations;
};

// Accuracy/speed trade-off used by sweeps: margins carry ~1e-7 error bars,
// far below the margins the corpora produce.
NormOptions sweep_norm_options();

// Runs the pointwise probe over corpus x grid in deterministic order
// (corpus outer, cells inner; first minimum wins ties).  If csv is non-null
// every sample is streamed as a (index, fn, cell, margin, error) row.
SweepSummary probe_sweep(const CorpusSpec& corpus, Conjecture conjecture,
                         const SweepGrid& grid = {},
                         const NormOptions& opts = sweep_norm_options(),
                         std::ostream* csv = nullptr);

} // namespace mixnorm
