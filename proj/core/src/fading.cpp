#include "stratolink/fading.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stratolink/errors.hpp"
#include "stratolink/numerics/binomial_series.hpp"
#include "stratolink/numerics/quadrature.hpp"

namespace stratolink {

namespace {

// log(1 - exp(-s)) for s >= 0.
double log1mexp(double s)
{
    return s > std::numbers::ln2 ? std::log1p(-std::exp(-s)) : std::log(-std::expm1(-s));
}

// Survival on the normalized axis x = I / eta.
double normalized_survival(double x, double alpha, double beta)
{
    if (x <= 0.0) {
        return 1.0;
    }
    return -std::expm1(alpha * log1mexp(std::pow(x, beta)));
}

}  // namespace

void EwParams::validate() const
{
    require(std::isfinite(alpha) && alpha > 0.0, "EW: alpha must be positive");
    require(std::isfinite(beta) && beta > 0.0, "EW: beta must be positive");
    require(std::isfinite(eta) && eta > 0.0, "EW: eta must be positive");
}

double ew_cdf(double irradiance, const EwParams& p)
{
    p.validate();
    require(irradiance >= 0.0, "EW: irradiance must be >= 0");
    if (irradiance == 0.0) {
        return 0.0;
    }
    const double s = std::pow(irradiance / p.eta, p.beta);
    return std::pow(-std::expm1(-s), p.alpha);
}

double ew_survival(double irradiance, const EwParams& p)
{
    p.validate();
    require(irradiance >= 0.0, "EW: irradiance must be >= 0");
    return normalized_survival(irradiance / p.eta, p.alpha, p.beta);
}

double ew_pdf(double irradiance, const EwParams& p)
{
    p.validate();
    require(irradiance > 0.0, "EW: density needs irradiance > 0");
    const double x = irradiance / p.eta;
    const double s = std::pow(x, p.beta);
    const double log_density = std::log(p.alpha * p.beta / p.eta) + (p.beta - 1.0) * std::log(x) - s +
                               (p.alpha - 1.0) * log1mexp(s);
    return std::exp(log_density);
}

double ew_quantile(double u, const EwParams& p)
{
    p.validate();
    require(u >= 0.0 && u < 1.0, "EW: quantile level must lie in [0, 1)");
    if (u == 0.0) {
        return 0.0;
    }
    // 1 - u^(1/alpha), kept accurate for u near 1
    const double tail = -std::expm1(std::log(u) / p.alpha);
    return p.eta * std::pow(-std::log(tail), 1.0 / p.beta);
}

double ew_mean_series(const EwParams& p)
{
    p.validate();
    const double exponent = 1.0 + 1.0 / p.beta;
    const auto sum = numerics::alternating_binomial_zeta(p.alpha - 1.0, exponent, 1e-12, 200);
    return p.alpha * p.eta * std::tgamma(exponent) * sum.value;
}

double ew_mean_quadrature(const EwParams& p)
{
    p.validate();
    auto survival = [&p](double x) { return normalized_survival(x, p.alpha, p.beta); };

    numerics::QuadratureOptions options;
    options.rel_tol = 1e-12;
    constexpr std::array<double, 6> cuts{0.0, 0.5, 0.9, 0.99, 0.999, 1.0};
    const auto body = numerics::integrate(survival, std::span<const double>(cuts), options);
    const auto tail = numerics::integrate_to_infinity(survival, 1.0, options);
    return p.eta * (body.value + tail.value);
}

EwMean ew_mean(const EwParams& p)
{
    p.validate();
    const double exponent = 1.0 + 1.0 / p.beta;
    try {
        const auto sum = numerics::alternating_binomial_zeta(p.alpha - 1.0, exponent, 1e-12, 200);
        return {p.alpha * p.eta * std::tgamma(exponent) * sum.value, MomentMethod::Series, sum.terms_used};
    } catch (const ConvergenceError&) {
        return {ew_mean_quadrature(p), MomentMethod::Quadrature, 0};
    }
}

EwParams fit_from_scintillation(double sigma2)
{
    if (!(sigma2 >= kMinFitScintillation && sigma2 <= kMaxFitScintillation)) {
        std::ostringstream msg;
        msg << "EW fit: scintillation index " << sigma2 << " outside supported range [" << kMinFitScintillation
            << ", " << kMaxFitScintillation << "]";
        throw UnsupportedRangeError(msg.str());
    }
    const double sigma = std::sqrt(sigma2);
    const double alpha = 7.220 * std::cbrt(sigma2) / std::tgamma(2.487 * std::cbrt(sigma) - 0.104);
    const double beta = std::pow(alpha * sigma2, -6.0 / 11.0);

    const double unit_scale_mean = ew_mean({alpha, beta, 1.0}).value;
    EwParams fitted{alpha, beta, 1.0 / unit_scale_mean};
    fitted.validate();
    return fitted;
}

}  // namespace stratolink
