#include "mixnorm/beta_ineq.hpp"

#include "mixnorm/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mixnorm {

double beta_F(double q, double a, int n)
{
    if (!(q > 0.0) || !(a > 0.0))
        throw std::domain_error("q and a must be positive");
    if (n < 1)
        throw std::domain_error("n must be a positive integer");
    const double aq = a * q;
    const double nq = static_cast<double>(n) * q;
    const double log_b = std::lgamma(aq) + std::lgamma(nq + 1.0) - std::lgamma(aq + nq + 1.0);
    return std::exp((std::log(aq) + log_b) / q);
}

MonotoneReport check_F_decreasing(double a, int n, const std::vector<double>& q_grid,
                                  double tolerance)
{
    for (size_t i = 1; i < q_grid.size(); ++i)
        if (!(q_grid[i] > q_grid[i - 1]))
            throw std::invalid_argument("q grid must be strictly increasing");

    MonotoneReport report;
    report.max_violation = -std::numeric_limits<double>::infinity();
    report.points.reserve(q_grid.size());
    for (double q : q_grid)
        report.points.push_back({q, beta_F(q, a, n)});

    for (size_t i = 1; i < report.points.size(); ++i) {
        ++report.pairs;
        const double step = report.points[i].F - report.points[i - 1].F;
        if (step > report.max_violation) {
            report.max_violation = step;
            report.worst_q_lo = report.points[i - 1].q;
            report.worst_q_hi = report.points[i].q;
        }
        if (step > tolerance)
            ++report.violations;
    }
    if (report.pairs == 0)
        report.max_violation = 0.0;
    report.ok = report.violations == 0;
    return report;
}

double cor32_margin(double x, double y, double delta, int n)
{
    if (!(x > 1.0))
        throw std::domain_error("x must exceed 1");
    if (!(y > 0.0))
        throw std::domain_error("y must be positive");
    if (!(delta >= 0.0))
        throw std::domain_error("delta must be nonnegative");
    if (n < 1)
        throw std::domain_error("n must be a positive integer");
    if (delta == 0.0)
        return 0.0; // both sides are B(x,y)^{x-1} exactly
    const double nd = static_cast<double>(n) * delta;
    return (x - 1.0) * log_beta(x + nd, y) - nd * std::log(y) -
           (x - 1.0 + nd) * log_beta(x, y);
}

Cor32Report cor32_grid_check(const std::vector<double>& xs, const std::vector<double>& ys,
                             const std::vector<double>& deltas, const std::vector<int>& ns,
                             double tolerance)
{
    Cor32Report report;
    report.min_margin = std::numeric_limits<double>::infinity();
    for (double x : xs)
        for (double y : ys)
            for (double delta : deltas) {
                double prev_margin = -std::numeric_limits<double>::infinity();
                for (int n : ns) {
                    const double margin = cor32_margin(x, y, delta, n);
                    report.points.push_back({x, y, delta, n, margin});
                    if (margin < report.min_margin) {
                        report.min_margin = margin;
                        report.worst = report.points.back();
                    }
                    if (margin < -tolerance)
                        ++report.violations;
                    if (margin < prev_margin - tolerance)
                        ++report.n_monotonicity_breaches;
                    prev_margin = margin;
                }
            }
    if (report.points.empty())
        report.min_margin = 0.0;
    report.ok = report.violations == 0;
    return report;
}

} // namespace mixnorm
