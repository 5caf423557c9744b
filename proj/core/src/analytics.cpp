#include "stratolink/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stratolink/errors.hpp"

namespace stratolink {

namespace {

double clamp_probability(double p)
{
    return std::clamp(p, 0.0, 1.0);
}

struct HopCdf {
    double cdf;
    double survival;
    int terms;
};

HopCdf hop_cdf(double gamma, const HopLink& hop, OutageMethod method, const SeriesControl& control)
{
    if (method == OutageMethod::Series) {
        const auto series = snr_cdf_series(gamma, hop, control);
        const double cdf = clamp_probability(series.value);
        return {cdf, 1.0 - cdf, series.terms_used};
    }
    require(method == OutageMethod::ClosedForm, "outage: analytic evaluation needs ClosedForm or Series");
    return {snr_cdf_direct(gamma, hop), snr_survival_direct(gamma, hop), 0};
}

OutageEstimate make_estimate(double value, OutageMethod method, int terms)
{
    OutageEstimate estimate;
    estimate.value = clamp_probability(value);
    estimate.method = method;
    if (method == OutageMethod::Series) {
        estimate.terms_used = terms;
    }
    return estimate;
}

}  // namespace

void HopLink::validate() const
{
    require(std::isfinite(avg_snr) && avg_snr > 0.0, "hop: average SNR must be positive");
    require(attenuation_g > 0.0 && attenuation_g <= 1.0, "hop: attenuation must lie in (0, 1]");
    ew.validate();
}

HopLink HopLink::with_avg_snr(double avg_snr_linear) const
{
    HopLink copy = *this;
    copy.avg_snr = avg_snr_linear;
    copy.validate();
    return copy;
}

std::string_view to_string(OutageMethod method) noexcept
{
    switch (method) {
    case OutageMethod::ClosedForm:
        return "closed_form";
    case OutageMethod::Series:
        return "series";
    case OutageMethod::MonteCarlo:
        return "monte_carlo";
    }
    return "unknown";
}

double snr_exponent(double gamma, const HopLink& hop)
{
    hop.validate();
    require(gamma >= 0.0, "SNR CDF: gamma must be >= 0");
    const double scale = hop.ew.eta * hop.attenuation_g;
    return std::pow(gamma / (scale * scale * hop.avg_snr), 0.5 * hop.ew.beta);
}

double snr_cdf_direct(double gamma, const HopLink& hop)
{
    const double t = snr_exponent(gamma, hop);
    if (t == 0.0) {
        return 0.0;
    }
    return std::pow(-std::expm1(-t), hop.ew.alpha);
}

double snr_survival_direct(double gamma, const HopLink& hop)
{
    const double t = snr_exponent(gamma, hop);
    if (t == 0.0) {
        return 1.0;
    }
    const double log_base = t > std::numbers::ln2 ? std::log1p(-std::exp(-t)) : std::log(-std::expm1(-t));
    return -std::expm1(hop.ew.alpha * log_base);
}

SeriesSum snr_cdf_series(double gamma, const HopLink& hop, const SeriesControl& control)
{
    const double t = snr_exponent(gamma, hop);
    if (t == 0.0) {
        return {0.0, 0, false};
    }
    return numerics::binomial_exponential_series(hop.ew.alpha, t, control);
}

OutageEstimate outage_ss1(const HopLink& uplink, const HopLink& scheduled, double gamma_th, OutageMethod method,
                          const SeriesControl& control)
{
    require(gamma_th > 0.0, "outage: threshold must be positive");
    const auto first = hop_cdf(gamma_th, uplink, method, control);
    const auto second = hop_cdf(gamma_th, scheduled, method, control);
    return make_estimate(first.cdf + second.cdf * first.survival, method, first.terms + second.terms);
}

OutageEstimate outage_ss2(const HopLink& uplink, std::span<const HopLink> candidates, double gamma_th,
                          OutageMethod method, const SeriesControl& control)
{
    require(gamma_th > 0.0, "outage: threshold must be positive");
    require(!candidates.empty(), "outage: no candidate satellites");
    const auto first = hop_cdf(gamma_th, uplink, method, control);
    double all_fail = 1.0;
    int terms = first.terms;
    for (const auto& hop : candidates) {
        const auto second = hop_cdf(gamma_th, hop, method, control);
        all_fail *= second.cdf;
        terms += second.terms;
    }
    return make_estimate(first.cdf + all_fail * first.survival, method, terms);
}

double diversity_gain_paper(Strategy strategy, double alpha_uplink, std::span<const double> betas)
{
    require(alpha_uplink > 0.0, "diversity: alpha must be positive");
    require(!betas.empty(), "diversity: need at least one beta");
    require(std::all_of(betas.begin(), betas.end(), [](double b) { return b > 0.0; }),
            "diversity: betas must be positive");
    if (strategy == Strategy::MinZenith) {
        require(betas.size() == 1, "diversity: SS-I takes only the scheduled hop's beta");
        return std::min(alpha_uplink, betas.front());
    }
    double gain = 0.0;
    for (double beta : betas) {
        gain += std::min(alpha_uplink, beta);
    }
    return gain;
}

double empirical_slope(std::span<const CurvePoint> curve)
{
    require(curve.size() >= 2, "slope: need at least two points");
    for (std::size_t i = 0; i < curve.size(); ++i) {
        require(curve[i].avg_snr > 0.0, "slope: average SNR must be positive");
        require(curve[i].outage > 0.0, "slope: outage must be positive (log of zero)");
        if (i > 0) {
            require(curve[i].avg_snr > curve[i - 1].avg_snr, "slope: average SNR must be strictly increasing");
        }
    }

    const std::size_t used = std::max<std::size_t>(2, (curve.size() + 1) / 2);
    const auto tail = curve.last(used);

    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& point : tail) {
        mean_x += std::log10(point.avg_snr);
        mean_y += -std::log10(point.outage);
    }
    mean_x /= static_cast<double>(used);
    mean_y /= static_cast<double>(used);

    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& point : tail) {
        const double dx = std::log10(point.avg_snr) - mean_x;
        sxy += dx * (-std::log10(point.outage) - mean_y);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace stratolink
