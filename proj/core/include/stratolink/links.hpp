#pragma once

#include <cstddef>
#include <vector>

#include "stratolink/analytics.hpp"
#include "stratolink/numerics/quadrature.hpp"
#include "stratolink/scenario.hpp"

namespace stratolink {

/// How one hop's channel statistics were obtained from the scenario.
struct HopDerivation {
    double zenith_rad = 0.0;
    double slant_path_km = 0.0;
    double scintillation = 0.0;
    double attenuation_g = 1.0;
    EwParams ew;
};

/// Fitted hops for one scenario at one average SNR: the satellite-to-HAPS
/// uplink, every HAPS-to-satellite candidate, and the hop SS-I schedules.
struct LinkSet {
    HopLink uplink;
    std::vector<HopLink> candidates;
    std::vector<double> candidate_zenith_rad;
    std::size_t ss1_position = 0;  ///< min-zenith candidate
    HopLink ss1_hop;               ///< candidates[ss1_position] with the SS-I parameter rule applied

    HopDerivation uplink_detail;
    std::vector<HopDerivation> candidate_detail;

    /// Same fits, with every hop's average SNR replaced.
    LinkSet with_avg_snr(double avg_snr_linear) const;
};

HopDerivation derive_uplink(const Scenario& scenario, const numerics::QuadratureOptions& quad = {});
HopDerivation derive_downlink(const Scenario& scenario, std::size_t position,
                              const numerics::QuadratureOptions& quad = {});

/// Geometry, attenuation, scintillation and EW fit for every hop.
LinkSet prepare_links(const Scenario& scenario, double avg_snr_linear = 1.0,
                      const numerics::QuadratureOptions& quad = {});

/// Closed-form (or series) outage of `strategy` on a prepared link set.
OutageEstimate analytic_outage(const LinkSet& links, Strategy strategy, double gamma_th,
                               OutageMethod method = OutageMethod::ClosedForm, const SeriesControl& control = {});

}  // namespace stratolink
