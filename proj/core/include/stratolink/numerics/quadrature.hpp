#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature.
//
// The integrand may return double or std::complex<double>; the error
// estimate is always a magnitude. Segments are bisected worst-first until
// the summed error estimate meets max(abs_tol, rel_tol * |I|), or the
// evaluation budget runs out, in which case ConvergenceError is thrown with
// the error estimate reached so far.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "stratolink/errors.hpp"

namespace stratolink::numerics {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    std::size_t max_evaluations = 1'000'000;
};

template <class T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// Abscissae of the 15-point Kronrod rule on [-1, 1]; odd entries (1, 3, 5, 7)
// are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};
inline constexpr std::size_t kRuleEvaluations = 15;

template <class T>
struct Segment {
    double lo;
    double hi;
    T value;
    double error;
};

template <class T>
double magnitude(const T& v)
{
    return std::abs(v);
}

template <class T, class F>
Segment<T> gauss_kronrod_15(F& f, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const T f_center = f(center);
    T kronrod = f_center * kKronrodWeights[7];
    T gauss = f_center * kGaussWeights[3];
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const T pair = f(center - dx) + f(center + dx);
        kronrod += pair * kKronrodWeights[i];
        if (i % 2 == 1) {
            gauss += pair * kGaussWeights[i / 2];
        }
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, magnitude(kronrod - gauss)};
}

}  // namespace detail

/// Integrates `f` over [breakpoints.front(), breakpoints.back()], starting
/// from one Gauss-Kronrod panel per breakpoint interval.
template <class F>
auto integrate(F&& f, std::span<const double> breakpoints, const QuadratureOptions& options = {})
    -> QuadratureResult<std::invoke_result_t<F&, double>>
{
    using T = std::invoke_result_t<F&, double>;
    using Segment = detail::Segment<T>;

    require(breakpoints.size() >= 2, "quadrature: need at least two breakpoints");
    require(std::is_sorted(breakpoints.begin(), breakpoints.end()),
            "quadrature: breakpoints must be sorted");
    require(options.rel_tol >= 0.0 && options.abs_tol >= 0.0,
            "quadrature: tolerances must be nonnegative");

    const auto by_error = [](const Segment& a, const Segment& b) { return a.error < b.error; };

    std::vector<Segment> heap;
    std::size_t evaluations = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] > breakpoints[i]) {
            heap.push_back(detail::gauss_kronrod_15<T>(f, breakpoints[i], breakpoints[i + 1]));
            evaluations += detail::kRuleEvaluations;
        }
    }
    if (heap.empty()) {
        return {T{}, 0.0, evaluations};
    }
    std::make_heap(heap.begin(), heap.end(), by_error);

    const auto totals = [&heap] {
        T value{};
        double error = 0.0;
        for (const auto& s : heap) {
            value += s.value;
            error += s.error;
        }
        return std::pair{value, error};
    };

    auto [value, error] = totals();
    constexpr double roundoff = 50.0 * std::numeric_limits<double>::epsilon();

    for (std::size_t iteration = 1;; ++iteration) {
        const double scale = detail::magnitude(value);
        const double target = std::max({options.abs_tol, options.rel_tol * scale, roundoff * scale});
        if (error <= target) {
            break;
        }
        if (evaluations + 2 * detail::kRuleEvaluations > options.max_evaluations) {
            throw ConvergenceError("quadrature: evaluation budget exhausted", error, evaluations);
        }

        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Segment worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            throw ConvergenceError("quadrature: segment too narrow to subdivide", error, evaluations);
        }
        const Segment left = detail::gauss_kronrod_15<T>(f, worst.lo, mid);
        const Segment right = detail::gauss_kronrod_15<T>(f, mid, worst.hi);
        evaluations += 2 * detail::kRuleEvaluations;

        for (const Segment& s : {left, right}) {
            heap.push_back(s);
            std::push_heap(heap.begin(), heap.end(), by_error);
        }

        if (iteration % 64 == 0) {
            std::tie(value, error) = totals();
        } else {
            value += left.value + right.value - worst.value;
            error += left.error + right.error - worst.error;
        }
    }

    std::tie(value, error) = totals();
    return {value, error, evaluations};
}

template <class F>
auto integrate(F&& f, double lo, double hi, const QuadratureOptions& options = {})
{
    const std::array<double, 2> ends{lo, hi};
    return integrate(std::forward<F>(f), std::span<const double>(ends), options);
}

/// Integrates `f` over [lo, inf) through the map x = lo + v / (1 - v).
/// `f` must tend to zero fast enough for the integral to exist and must
/// tolerate very large arguments.
template <class F>
auto integrate_to_infinity(F&& f, double lo, const QuadratureOptions& options = {})
{
    auto mapped = [&f, lo](double v) {
        const double gap = 1.0 - v;
        const double x = lo + v / gap;
        using T = std::invoke_result_t<F&, double>;
        if (!std::isfinite(x)) {
            return T{};
        }
        return f(x) * (1.0 / (gap * gap));
    };
    constexpr std::array<double, 5> cuts{0.0, 0.5, 0.9, 0.99, 1.0};
    return integrate(mapped, std::span<const double>(cuts), options);
}

}  // namespace stratolink::numerics
