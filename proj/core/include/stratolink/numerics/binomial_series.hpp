#pragma once

namespace stratolink::numerics {

/// Truncation policy for the binomial expansions used by the CDF series.
struct SeriesControl {
    double rel_tol = 1e-12;
    int max_terms = 200;
    /// When the partial sums have not met `rel_tol` after `max_terms`, add
    /// the exact remainder (evaluated as a Beta-type integral) instead of
    /// failing. Without it, non-convergence throws ConvergenceError.
    bool tail_correction = true;

    void validate() const;
};

struct SeriesSum {
    double value = 0.0;
    int terms_used = 0;
    bool tail_corrected = false;
};

/// Sums  sum_{r >= 0} C(alpha, r) (-1)^r exp(-r t),  which equals
/// (1 - exp(-t))^alpha for alpha > 0, t >= 0.
///
/// Generalized binomial coefficients follow C(a, r+1) = C(a, r) (a - r) / (r + 1).
/// Once r > alpha every remaining term has the same sign and shrinking
/// magnitude, so |remainder| <= |next term| / (1 - exp(-t)); summation stops
/// when that bound drops below rel_tol * |partial sum|.
SeriesSum binomial_exponential_series(double alpha, double t, const SeriesControl& control = {});

/// Exact remainder  sum_{r >= n} C(alpha, r) (-1)^r exp(-r t)  for n > alpha,
/// from  C(alpha, r) (-1)^r = -(sin(pi alpha) / pi) B(r - alpha, alpha + 1).
double binomial_exponential_remainder(double alpha, double t, int n);

/// sum_{j >= 0} (-1)^j C(x, j) (1 + j)^(-p) for x + p > 0. Beyond j = x the
/// terms share one sign and decay like j^-(1 + x + p); summation stops when
/// the estimated remainder |term| j / (x + p) drops below rel_tol * |sum|.
/// Throws ConvergenceError if that has not happened after `max_terms` terms.
SeriesSum alternating_binomial_zeta(double x, double p, double rel_tol, int max_terms);

}  // namespace stratolink::numerics
