#pragma once

#include <vector>

// Beta-function consequences of the norm computations: the monotone quantity
// F(q) = (a q B(a q, n q + 1))^{1/q} and the exponent inequality
//
//   y^{n delta} B(x, y)^{x - 1 + n delta} <= B(x + n delta, y)^{x - 1}
//
// for x > 1, y > 0, delta >= 0 and positive integers n.  These are verifiers
// over finite grids, not proofs; any violation is carried in the report with
// the inputs that produced it.

namespace mixnorm {

// F evaluated in log space.  Deliberately routed through the C library's
// lgamma rather than this library's own log_gamma so that agreement with
// monomial_norm_closed crosses two independent implementations.
double beta_F(double q, double a, int n);

struct MonotonePoint {
    double q = 0.0;
    double F = 0.0;
};

struct MonotoneReport {
    std::vector<MonotonePoint> points; // the sampled graph, for CSV export
    long pairs = 0;
    long violations = 0;       // consecutive increases beyond tolerance
    double max_violation = 0.0; // max of F(q_{i+1}) - F(q_i); <= 0 when monotone
    double worst_q_lo = 0.0;
    double worst_q_hi = 0.0;
    bool ok = true; // max_violation <= tolerance
};

// Checks F(q_{i+1}) <= F(q_i) + tolerance along a strictly increasing grid;
// fewer than two points is vacuously monotone.
MonotoneReport check_F_decreasing(double a, int n, const std::vector<double>& q_grid,
                                  double tolerance = 1e-12);

// log(RHS) - log(LHS) of the exponent inequality; nonnegative when the
// inequality holds.  delta = 0 gives exactly 0.
double cor32_margin(double x, double y, double delta, int n);

struct Cor32Point {
    double x = 0.0;
    double y = 0.0;
    double delta = 0.0;
    int n = 0;
    double margin = 0.0;
};

struct Cor32Report {
    std::vector<Cor32Point> points;
    long violations = 0; // margin < -tolerance
    double min_margin = 0.0;
    Cor32Point worst;
    // Empirical side observation (not part of the inequality itself): for
    // fixed (x, y, delta) the margin should not decrease in n.
    long n_monotonicity_breaches = 0;
    bool ok = true;
};

Cor32Report cor32_grid_check(const std::vector<double>& xs, const std::vector<double>& ys,
                             const std::vector<double>& deltas, const std::vector<int>& ns,
                             double tolerance = 1e-12);

} // namespace mixnorm
