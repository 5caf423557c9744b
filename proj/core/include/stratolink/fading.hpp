#pragma once

#include <random>

#include "stratolink/random.hpp"

namespace stratolink {

/// Exponentiated-Weibull irradiance distribution,
/// F(I) = (1 - exp(-(I / eta)^beta))^alpha.
struct EwParams {
    double alpha = 1.0;  ///< shape
    double beta = 1.0;   ///< shape
    double eta = 1.0;    ///< scale

    void validate() const;
    bool operator==(const EwParams&) const = default;
};

double ew_cdf(double irradiance, const EwParams& p);
/// 1 - ew_cdf, without cancellation in either tail.
double ew_survival(double irradiance, const EwParams& p);
double ew_pdf(double irradiance, const EwParams& p);
/// Inverse CDF, eta (-ln(1 - u^(1/alpha)))^(1/beta), for u in [0, 1).
double ew_quantile(double u, const EwParams& p);

/// One inverse-transform draw from `gen`.
template <std::uniform_random_bit_generator G>
double ew_sample(G& gen, const EwParams& p)
{
    static_assert(G::min() == 0 && G::max() == ~typename G::result_type{0} && sizeof(typename G::result_type) == 8,
                  "ew_sample needs a full-range 64-bit generator");
    return ew_quantile(to_unit_interval(gen()), p);
}

enum class MomentMethod { Series, Quadrature };

struct EwMean {
    double value = 0.0;
    MomentMethod method = MomentMethod::Series;
    int terms_used = 0;
};

/// E[I] = alpha eta Gamma(1 + 1/beta) sum_j (-1)^j C(alpha - 1, j) (1 + j)^(-1 - 1/beta).
/// The series is cut once its estimated remainder falls below 1e-12 of the
/// partial sum; if 200 terms are not enough the mean comes from quadrature.
EwMean ew_mean(const EwParams& p);
/// Series route only; throws ConvergenceError when it does not converge.
double ew_mean_series(const EwParams& p);
/// eta * int_0^inf (1 - F(x)) dx on the normalized variable x = I / eta.
double ew_mean_quadrature(const EwParams& p);

inline constexpr double kMinFitScintillation = 1e-5;
inline constexpr double kMaxFitScintillation = 5.0;

/// EW parameters for a given scintillation index:
///   alpha = 7.220 s^(2/3) / Gamma(2.487 s^(1/3) - 0.104),  s = sqrt(sigma2)
///   beta  = (alpha sigma2)^(-6/11)
///   eta   chosen so that E[I] = 1.
/// Throws UnsupportedRangeError outside [kMinFitScintillation, kMaxFitScintillation].
EwParams fit_from_scintillation(double sigma2);

}  // namespace stratolink
