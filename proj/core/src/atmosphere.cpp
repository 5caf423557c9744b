#include "stratolink/atmosphere.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "stratolink/errors.hpp"
#include "stratolink/units.hpp"

namespace stratolink {

namespace {

constexpr double kFiveSixths = 5.0 / 6.0;

void validate_quadrature(const numerics::QuadratureOptions& quad)
{
    require(quad.rel_tol > 0.0 && quad.rel_tol <= 1e-2, "scintillation: quadrature tolerance must lie in (0, 1e-2]");
}

// Panel edges clustered near the HAPS, where the profile varies on a
// kilometer scale; the rest of the path is left to adaptive refinement.
std::vector<double> altitude_breakpoints(const PathGeometry& geom)
{
    std::vector<double> cuts{geom.haps_altitude_m};
    for (double offset = 250.0; geom.haps_altitude_m + offset < geom.sat_altitude_m; offset *= 2.0) {
        cuts.push_back(geom.haps_altitude_m + offset);
    }
    cuts.push_back(geom.sat_altitude_m);
    return cuts;
}

// k^(7/6) (H - h)^(5/6) sec^(11/6)(zeta)
double path_prefactor(const PathGeometry& geom, const OpticalBeam& beam)
{
    return std::pow(beam.wavenumber(), 7.0 / 6.0) * std::pow(geom.vertical_extent_m(), kFiveSixths) *
           std::pow(1.0 / std::cos(geom.zenith_rad), 11.0 / 6.0);
}

}  // namespace

void AttenuationCoefficients::validate() const
{
    require(std::isfinite(meso_per_km) && meso_per_km >= 0.0, "atmosphere: mesospheric coefficient must be >= 0");
    require(std::isfinite(strato_per_km) && strato_per_km >= 0.0,
            "atmosphere: stratospheric coefficient must be >= 0");
    require(rho_fraction >= 0.0 && rho_fraction <= 1.0, "atmosphere: rho_fraction must lie in [0, 1]");
}

double stratospheric_extinction(VolcanicRegime regime) noexcept
{
    switch (regime) {
    case VolcanicRegime::Moderate:
        return 1e-4;
    case VolcanicRegime::High:
        return 1e-3;
    case VolcanicRegime::Extreme:
        return 4e-3;
    }
    return 0.0;
}

AttenuationCoefficients coefficients_for(VolcanicRegime regime, double rho_fraction)
{
    AttenuationCoefficients coeffs{kMesosphericExtinctionPerKm, stratospheric_extinction(regime), rho_fraction};
    coeffs.validate();
    return coeffs;
}

std::string_view to_string(VolcanicRegime regime) noexcept
{
    switch (regime) {
    case VolcanicRegime::Moderate:
        return "moderate";
    case VolcanicRegime::High:
        return "high";
    case VolcanicRegime::Extreme:
        return "extreme";
    }
    return "unknown";
}

std::optional<VolcanicRegime> parse_volcanic_regime(std::string_view name) noexcept
{
    for (auto regime : {VolcanicRegime::Moderate, VolcanicRegime::High, VolcanicRegime::Extreme}) {
        if (name == to_string(regime)) {
            return regime;
        }
    }
    return std::nullopt;
}

double transmittance(const AttenuationCoefficients& coeffs, double path_length_km)
{
    coeffs.validate();
    require(std::isfinite(path_length_km) && path_length_km >= 0.0, "atmosphere: path length must be >= 0");
    const double optical_depth = coeffs.meso_per_km * coeffs.rho_fraction * path_length_km +
                                 coeffs.strato_per_km * (1.0 - coeffs.rho_fraction) * path_length_km;
    return std::exp(-optical_depth);
}

void TurbulenceProfile::validate() const
{
    require(std::isfinite(wind_speed_mps) && wind_speed_mps > 0.0, "turbulence: wind speed must be positive");
    require(std::isfinite(ground_cn2) && ground_cn2 > 0.0, "turbulence: ground Cn2 must be positive");
}

double TurbulenceProfile::cn2_at(double altitude_m) const
{
    require(altitude_m >= 0.0, "turbulence: altitude must be >= 0");
    const double wind = wind_speed_mps / 27.0;
    return 0.00594 * wind * wind * std::pow(1e-5 * altitude_m, 10.0) * std::exp(-altitude_m / 1000.0) +
           2.7e-16 * std::exp(-altitude_m / 1500.0) + ground_cn2 * std::exp(-altitude_m / 100.0);
}

void OpticalBeam::validate() const
{
    require(std::isfinite(wavelength_m) && wavelength_m > 0.0, "beam: wavelength must be positive");
    require(std::isfinite(aperture_diameter_m) && aperture_diameter_m > 0.0,
            "beam: aperture diameter must be positive");
}

double OpticalBeam::wavenumber() const noexcept
{
    return 2.0 * std::numbers::pi / wavelength_m;
}

double scintillation_uplink(const PathGeometry& geom, const OpticalBeam& beam, const Cn2Profile& cn2,
                            const numerics::QuadratureOptions& quad)
{
    geom.validate();
    beam.validate();
    validate_quadrature(quad);

    const double k = beam.wavenumber();
    const double slant = slant_path_length(geom);
    const double extent = geom.vertical_extent_m();
    const double averaging = k * beam.aperture_diameter_m * beam.aperture_diameter_m / (16.0 * slant);
    const double averaging_power = std::pow(averaging, kFiveSixths);

    auto integrand = [&](double w) {
        const std::complex<double> base(averaging, (w - geom.haps_altitude_m) / extent);
        return cn2(w) * (std::pow(base, kFiveSixths) - averaging_power);
    };
    const auto cuts = altitude_breakpoints(geom);
    const auto integral = numerics::integrate(integrand, std::span<const double>(cuts), quad);

    return 8.7 * path_prefactor(geom, beam) * integral.value.real();
}

double scintillation_uplink(const PathGeometry& geom, const OpticalBeam& beam, const TurbulenceProfile& profile,
                            const numerics::QuadratureOptions& quad)
{
    profile.validate();
    return scintillation_uplink(geom, beam, [&profile](double h) { return profile.cn2_at(h); }, quad);
}

double scintillation_downlink(const PathGeometry& geom, const OpticalBeam& beam, const Cn2Profile& cn2,
                              const numerics::QuadratureOptions& quad)
{
    geom.validate();
    beam.validate();
    validate_quadrature(quad);

    const double extent = geom.vertical_extent_m();
    auto integrand = [&](double w) {
        const double u = (w - geom.haps_altitude_m) / extent;
        return cn2(w) * std::pow((1.0 - u) * u, kFiveSixths);
    };
    const auto cuts = altitude_breakpoints(geom);
    const auto integral = numerics::integrate(integrand, std::span<const double>(cuts), quad);

    return 2.2 * path_prefactor(geom, beam) * integral.value;
}

double scintillation_downlink(const PathGeometry& geom, const OpticalBeam& beam, const TurbulenceProfile& profile,
                              const numerics::QuadratureOptions& quad)
{
    profile.validate();
    return scintillation_downlink(geom, beam, [&profile](double h) { return profile.cn2_at(h); }, quad);
}

}  // namespace stratolink
