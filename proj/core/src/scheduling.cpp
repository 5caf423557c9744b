#include "stratolink/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "stratolink/errors.hpp"

namespace stratolink {

std::string_view to_string(Strategy strategy) noexcept
{
    return strategy == Strategy::MinZenith ? "ss1" : "ss2";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept
{
    if (name == "ss1") {
        return Strategy::MinZenith;
    }
    if (name == "ss2") {
        return Strategy::MaxSnr;
    }
    return std::nullopt;
}

std::string_view to_string(Ss1ParamRule rule) noexcept
{
    return rule == Ss1ParamRule::MinZenithFit ? "min_zenith_fit" : "extrema";
}

std::optional<Ss1ParamRule> parse_ss1_rule(std::string_view name) noexcept
{
    if (name == "min_zenith_fit") {
        return Ss1ParamRule::MinZenithFit;
    }
    if (name == "extrema") {
        return Ss1ParamRule::Extrema;
    }
    return std::nullopt;
}

void CandidateSatellite::validate() const
{
    require(index >= 1, "candidate: index must be >= 1");
    require(zenith_rad >= 0.0 && zenith_rad < std::numbers::pi / 2.0, "candidate: zenith must lie in [0, 90) degrees");
    ew.validate();
    require(attenuation_g > 0.0 && attenuation_g <= 1.0, "candidate: attenuation must lie in (0, 1]");
    require(avg_snr > 0.0, "candidate: average SNR must be positive");
}

std::size_t select_min_zenith(std::span<const double> zeniths_rad)
{
    require(!zeniths_rad.empty(), "scheduling: no candidates");
    // min_element keeps the first of equal elements
    return static_cast<std::size_t>(std::min_element(zeniths_rad.begin(), zeniths_rad.end()) - zeniths_rad.begin());
}

std::size_t select_min_zenith(std::span<const CandidateSatellite> candidates)
{
    std::vector<double> zeniths;
    zeniths.reserve(candidates.size());
    for (const auto& c : candidates) {
        c.validate();
        zeniths.push_back(c.zenith_rad);
    }
    return select_min_zenith(zeniths);
}

std::size_t select_max_snr(std::span<const double> instantaneous_snrs)
{
    require(!instantaneous_snrs.empty(), "scheduling: no candidates");
    // max_element also keeps the first of equal elements
    return static_cast<std::size_t>(std::max_element(instantaneous_snrs.begin(), instantaneous_snrs.end()) -
                                    instantaneous_snrs.begin());
}

EwParams scheduled_params_ss1(std::span<const EwParams> candidates)
{
    require(!candidates.empty(), "scheduling: no candidates");
    EwParams result = candidates.front();
    for (const auto& p : candidates.subspan(1)) {
        result.alpha = std::min(result.alpha, p.alpha);
        result.beta = std::max(result.beta, p.beta);
        result.eta = std::max(result.eta, p.eta);
    }
    return result;
}

EwParams scheduled_params_ss1(std::span<const CandidateSatellite> candidates)
{
    std::vector<EwParams> params;
    params.reserve(candidates.size());
    for (const auto& c : candidates) {
        params.push_back(c.ew);
    }
    return scheduled_params_ss1(params);
}

}  // namespace stratolink
