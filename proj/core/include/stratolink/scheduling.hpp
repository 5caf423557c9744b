#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "stratolink/fading.hpp"

namespace stratolink {

/// Opportunistic scheduling strategies at the HAPS.
enum class Strategy {
    MinZenith,  ///< SS-I: serve the candidate with the smallest zenith angle
    MaxSnr,     ///< SS-II: serve the candidate with the largest instantaneous SNR
};

std::string_view to_string(Strategy strategy) noexcept;
/// Accepts "ss1" / "ss2".
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

/// How SS-I assigns fading parameters to the scheduled hop.
enum class Ss1ParamRule {
    /// The min-zenith candidate keeps its own fitted parameters.
    MinZenithFit,
    /// Componentwise extrema over all candidates: (min alpha, max beta, max eta).
    Extrema,
};

std::string_view to_string(Ss1ParamRule rule) noexcept;
std::optional<Ss1ParamRule> parse_ss1_rule(std::string_view name) noexcept;

struct CandidateSatellite {
    int index = 1;  ///< 1-based satellite label
    double zenith_rad = 0.0;
    EwParams ew;
    double attenuation_g = 1.0;
    double avg_snr = 1.0;  ///< linear

    void validate() const;
};

// Selections return the 0-based position in the input; ties go to the
// earliest position. Empty input throws DomainError.

std::size_t select_min_zenith(std::span<const double> zeniths_rad);
std::size_t select_min_zenith(std::span<const CandidateSatellite> candidates);

std::size_t select_max_snr(std::span<const double> instantaneous_snrs);

/// (min alpha, max beta, max eta) over the candidates.
EwParams scheduled_params_ss1(std::span<const EwParams> candidates);
EwParams scheduled_params_ss1(std::span<const CandidateSatellite> candidates);

}  // namespace stratolink
