#include "stratolink/numerics/binomial_series.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "stratolink/errors.hpp"
#include "stratolink/numerics/quadrature.hpp"

namespace stratolink::numerics {

namespace {

// sin(pi x) with the argument reduced first so integers give exact zeros.
double sin_pi(double x)
{
    const double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
    if (r == 0.0 || std::abs(r) == 1.0) {
        return 0.0;
    }
    return std::sin(std::numbers::pi * r);
}

}  // namespace

void SeriesControl::validate() const
{
    require(rel_tol > 0.0, "series: rel_tol must be positive");
    require(max_terms >= 1, "series: max_terms must be at least 1");
}

double binomial_exponential_remainder(double alpha, double t, int n)
{
    require(alpha > 0.0, "series: alpha must be positive");
    require(t >= 0.0, "series: exponent must be nonnegative");
    require(n > alpha, "series: remainder needs n > alpha");

    const double sine = sin_pi(alpha);
    if (sine == 0.0) {
        return 0.0;
    }
    const double z = std::exp(-t);
    const double q = -std::expm1(-t);  // 1 - z without cancellation
    const double zn = std::exp(-static_cast<double>(n) * t);
    if (zn == 0.0) {
        return 0.0;
    }

    // sum_{r>=n} B(r - a, a + 1) z^r = z^n int_0^1 (1-v)^(n-a-1) v^a / (q + v z) dv
    const double power = static_cast<double>(n) - alpha - 1.0;
    auto integrand = [=](double v) {
        return std::exp(power * std::log1p(-v) + alpha * std::log(v)) / (q + v * z);
    };

    const double width = 1.0 / static_cast<double>(n);
    std::array<double, 6> cuts{0.0, std::min(q, width), width, std::min(10.0 * width, 1.0), 0.5, 1.0};
    std::sort(cuts.begin(), cuts.end());

    QuadratureOptions options;
    options.rel_tol = 1e-13;
    options.abs_tol = 1e-16;
    options.max_evaluations = 200'000;
    const auto integral = integrate(integrand, std::span<const double>(cuts), options);

    return -(sine / std::numbers::pi) * zn * integral.value;
}

SeriesSum binomial_exponential_series(double alpha, double t, const SeriesControl& control)
{
    require(alpha > 0.0, "series: alpha must be positive");
    require(t >= 0.0 && !std::isnan(t), "series: exponent must be nonnegative");
    control.validate();
    if (t == 0.0) {
        return {0.0, 0, false};  // (1 - 1)^alpha
    }

    const double z = std::exp(-t);
    const double q = -std::expm1(-t);

    double coefficient = 1.0;  // (-1)^r C(alpha, r)
    double z_power = 1.0;
    double sum = 0.0;
    int terms = 0;
    while (terms < control.max_terms) {
        sum += coefficient * z_power;
        const double r = static_cast<double>(terms);
        ++terms;

        coefficient *= (r - alpha) / (r + 1.0);
        z_power *= z;
        const double next = coefficient * z_power;
        if (next == 0.0) {
            return {sum, terms, false};
        }
        if (r + 1.0 > alpha && q > 0.0) {
            const double bound = std::abs(next) / q;
            if (bound <= control.rel_tol * std::max(std::abs(sum), std::numeric_limits<double>::min())) {
                return {sum, terms, false};
            }
        }
    }

    if (control.tail_correction && terms > alpha) {
        return {sum + binomial_exponential_remainder(alpha, t, terms), terms, true};
    }
    const double last = std::abs(coefficient * z_power);
    throw ConvergenceError("binomial series did not converge", q > 0.0 ? last / q : last,
                           static_cast<std::size_t>(terms));
}

SeriesSum alternating_binomial_zeta(double x, double p, double rel_tol, int max_terms)
{
    require(x + p > 0.0, "binomial zeta: needs x + p > 0");
    require(rel_tol > 0.0 && max_terms >= 1, "binomial zeta: bad truncation control");

    double coefficient = 1.0;  // C(x, j)
    double sum = 0.0;
    double tail = 0.0;
    for (int j = 0; j < max_terms; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double term = sign * coefficient * std::pow(1.0 + j, -p);
        sum += term;
        coefficient *= (x - j) / (j + 1.0);
        if (coefficient == 0.0) {
            return {sum, j + 1, false};
        }
        // Past j = x the terms keep one sign and fall off like j^-(1 + x + p),
        // so the remainder is about |term| j / (x + p).
        if (j > x) {
            tail = std::abs(term) * (j + 1.0) / (x + p);
            if (tail <= rel_tol * std::abs(sum)) {
                return {sum, j + 1, false};
            }
        }
    }
    throw ConvergenceError("binomial zeta series did not converge", tail, static_cast<std::size_t>(max_terms));
}

}  // namespace stratolink::numerics
