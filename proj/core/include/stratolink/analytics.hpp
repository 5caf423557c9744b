#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "stratolink/fading.hpp"
#include "stratolink/numerics/binomial_series.hpp"
#include "stratolink/scheduling.hpp"

namespace stratolink {

/// One optical hop: gamma = avg_snr * (attenuation_g * f)^2 with f ~ EW(ew).
struct HopLink {
    double avg_snr = 1.0;  ///< linear
    double attenuation_g = 1.0;
    EwParams ew;

    void validate() const;
    HopLink with_avg_snr(double avg_snr_linear) const;
};

using numerics::SeriesControl;
using numerics::SeriesSum;

enum class OutageMethod { ClosedForm, Series, MonteCarlo };

std::string_view to_string(OutageMethod method) noexcept;

struct OutageEstimate {
    double value = 0.0;
    OutageMethod method = OutageMethod::ClosedForm;
    std::optional<double> std_error;  ///< Monte-Carlo only
    std::optional<int> terms_used;    ///< series only
};

/// (gamma / ((eta g)^2 avg_snr))^(beta / 2), the exponent inside the SNR CDF.
double snr_exponent(double gamma, const HopLink& hop);

/// F(gamma) = (1 - exp(-(gamma / ((eta g)^2 avg_snr))^(beta/2)))^alpha.
double snr_cdf_direct(double gamma, const HopLink& hop);
/// 1 - F(gamma) without cancellation.
double snr_survival_direct(double gamma, const HopLink& hop);

/// Binomial expansion of F, sum_r C(alpha, r) (-1)^r exp(-r t); see
/// numerics::binomial_exponential_series for the truncation rule.
SeriesSum snr_cdf_series(double gamma, const HopLink& hop, const SeriesControl& control = {});

/// Pr[min(gamma_AH, gamma_HB) <= gamma_th] = 1 - (1 - F_AH)(1 - F_HB),
/// evaluated as F_AH + F_HB (1 - F_AH) so small outages keep full precision.
/// `method` selects the direct form or the binomial series for each F.
OutageEstimate outage_ss1(const HopLink& uplink, const HopLink& scheduled, double gamma_th,
                          OutageMethod method = OutageMethod::ClosedForm, const SeriesControl& control = {});

/// Pr[min(gamma_AH, max_k gamma_HBk) <= gamma_th] = 1 - (1 - F_AH)(1 - prod_k F_HBk).
OutageEstimate outage_ss2(const HopLink& uplink, std::span<const HopLink> candidates, double gamma_th,
                          OutageMethod method = OutageMethod::ClosedForm, const SeriesControl& control = {});

/// Literal high-SNR diversity orders: min(alpha_AH, beta_K) for SS-I (one
/// beta, the scheduled hop's) and sum_k min(alpha_AH, beta_k) for SS-II.
double diversity_gain_paper(Strategy strategy, double alpha_uplink, std::span<const double> betas);

struct CurvePoint {
    double avg_snr = 0.0;  ///< linear
    double outage = 0.0;
};

/// Least-squares slope of -log10(P) against log10(avg_snr) over the upper
/// half of the curve (at least two points).
double empirical_slope(std::span<const CurvePoint> curve);

}  // namespace stratolink
