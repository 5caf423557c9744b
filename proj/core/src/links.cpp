#include "stratolink/links.hpp"

#include "stratolink/errors.hpp"
#include "stratolink/units.hpp"

namespace stratolink {

namespace {

enum class Direction { Uplink, Downlink };

HopDerivation derive(const Scenario& scenario, const PathGeometry& geom, Direction direction,
                     const numerics::QuadratureOptions& quad)
{
    HopDerivation hop;
    hop.zenith_rad = geom.zenith_rad;
    hop.slant_path_km = slant_path_length(geom) / kMetersPerKilometer;
    hop.attenuation_g = transmittance(scenario.attenuation(), hop.slant_path_km);
    require(hop.attenuation_g > 0.0, "link: attenuation underflows to zero");
    hop.scintillation = direction == Direction::Uplink
                            ? scintillation_uplink(geom, scenario.beam(), scenario.turbulence(), quad)
                            : scintillation_downlink(geom, scenario.beam(), scenario.turbulence(), quad);
    hop.ew = fit_from_scintillation(hop.scintillation);
    return hop;
}

HopLink to_hop(const HopDerivation& d, double avg_snr)
{
    HopLink hop{avg_snr, d.attenuation_g, d.ew};
    hop.validate();
    return hop;
}

}  // namespace

LinkSet LinkSet::with_avg_snr(double avg_snr_linear) const
{
    LinkSet copy = *this;
    copy.uplink = uplink.with_avg_snr(avg_snr_linear);
    for (auto& hop : copy.candidates) {
        hop = hop.with_avg_snr(avg_snr_linear);
    }
    copy.ss1_hop = ss1_hop.with_avg_snr(avg_snr_linear);
    return copy;
}

HopDerivation derive_uplink(const Scenario& scenario, const numerics::QuadratureOptions& quad)
{
    return derive(scenario, scenario.uplink_geometry(), Direction::Uplink, quad);
}

HopDerivation derive_downlink(const Scenario& scenario, std::size_t position, const numerics::QuadratureOptions& quad)
{
    return derive(scenario, scenario.candidate_geometry(position), Direction::Downlink, quad);
}

LinkSet prepare_links(const Scenario& scenario, double avg_snr_linear, const numerics::QuadratureOptions& quad)
{
    scenario.validate();
    require(avg_snr_linear > 0.0, "link: average SNR must be positive");

    LinkSet links;
    links.uplink_detail = derive_uplink(scenario, quad);
    links.uplink = to_hop(links.uplink_detail, avg_snr_linear);

    std::vector<EwParams> candidate_params;
    for (std::size_t k = 0; k < scenario.candidate_zenith_deg.size(); ++k) {
        links.candidate_detail.push_back(derive_downlink(scenario, k, quad));
        const auto& detail = links.candidate_detail.back();
        links.candidates.push_back(to_hop(detail, avg_snr_linear));
        links.candidate_zenith_rad.push_back(detail.zenith_rad);
        candidate_params.push_back(detail.ew);
    }

    links.ss1_position = select_min_zenith(links.candidate_zenith_rad);
    links.ss1_hop = links.candidates[links.ss1_position];
    if (scenario.ss1_rule == Ss1ParamRule::Extrema) {
        links.ss1_hop.ew = scheduled_params_ss1(candidate_params);
    }
    return links;
}

OutageEstimate analytic_outage(const LinkSet& links, Strategy strategy, double gamma_th, OutageMethod method,
                               const SeriesControl& control)
{
    if (strategy == Strategy::MinZenith) {
        return outage_ss1(links.uplink, links.ss1_hop, gamma_th, method, control);
    }
    return outage_ss2(links.uplink, links.candidates, gamma_th, method, control);
}

}  // namespace stratolink
