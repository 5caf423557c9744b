#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "stratolink/atmosphere.hpp"
#include "stratolink/geometry.hpp"
#include "stratolink/scheduling.hpp"

namespace stratolink {

/// Evenly spaced dB grid, inclusive of `stop` when it lies on the grid.
struct DbRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    bool operator==(const DbRange&) const = default;
};

using DbGrid = std::variant<std::vector<double>, DbRange>;

std::vector<double> expand_grid(const DbGrid& grid);

/// Raw extinction coefficients, per km.
struct RawExtinction {
    double meso_per_km = 0.0;
    double strato_per_km = 0.0;

    bool operator==(const RawExtinction&) const = default;
};

using ExtinctionSpec = std::variant<VolcanicRegime, RawExtinction>;

/// A complete experiment in the units used by scenario files: altitudes in
/// km, angles in degrees, wavelength in nm, SNRs in dB. Conversion to the
/// SI/radian/linear quantities the models use happens in the accessors.
struct Scenario {
    // geometry
    double sat_altitude_km = 500.0;
    double haps_altitude_km = 22.0;
    double uplink_zenith_deg = 70.0;
    std::vector<double> candidate_zenith_deg{81.0, 73.0, 66.0, 77.0, 61.0};

    // atmosphere
    ExtinctionSpec extinction = VolcanicRegime::Moderate;
    double rho_fraction = 0.1;

    // beam
    double wavelength_nm = 1550.0;
    double aperture_m = 0.1;

    // turbulence
    double wind_speed_mps = 60.0;
    double ground_cn2 = 1.7e-14;

    // run; both hops share the same average SNR
    DbGrid gamma_bar_db = DbRange{0.0, 20.0, 2.0};
    double gamma_th_db = 7.0;
    std::uint64_t trials = 10'000'000;
    std::uint64_t seed = 20220513;
    Ss1ParamRule ss1_rule = Ss1ParamRule::MinZenithFit;

    /// Throws DomainError naming the offending scenario-file field.
    void validate() const;

    AttenuationCoefficients attenuation() const;
    PathGeometry uplink_geometry() const;
    PathGeometry candidate_geometry(std::size_t position) const;
    OpticalBeam beam() const;
    TurbulenceProfile turbulence() const;
    double gamma_th_linear() const;
    std::vector<double> gamma_bar_grid_db() const;

    bool operator==(const Scenario&) const = default;
};

}  // namespace stratolink
