#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "stratolink/geometry.hpp"
#include "stratolink/numerics/quadrature.hpp"

namespace stratolink {

/// Two-layer Beer-Lambert extinction. Coefficients are per kilometer and
/// apply to path lengths in kilometers: the first rho_fraction of the path
/// sees the mesospheric coefficient, the rest the stratospheric one.
struct AttenuationCoefficients {
    double meso_per_km = 0.0;
    double strato_per_km = 0.0;
    double rho_fraction = 0.0;

    void validate() const;
    bool operator==(const AttenuationCoefficients&) const = default;
};

/// Stratospheric aerosol loading presets.
enum class VolcanicRegime { Moderate, High, Extreme };

inline constexpr double kMesosphericExtinctionPerKm = 1e-5;

/// Stratospheric extinction coefficient (per km) of a regime preset.
double stratospheric_extinction(VolcanicRegime regime) noexcept;

/// Preset coefficients: mesospheric 1e-5 per km plus the regime's stratospheric value.
AttenuationCoefficients coefficients_for(VolcanicRegime regime, double rho_fraction);

std::string_view to_string(VolcanicRegime regime) noexcept;
std::optional<VolcanicRegime> parse_volcanic_regime(std::string_view name) noexcept;

/// Fraction of optical power surviving `path_length_km` of extinction.
double transmittance(const AttenuationCoefficients& coeffs, double path_length_km);

/// Hufnagel-Valley refractive-index structure profile with the high-altitude
/// wind term driven by the stratospheric wind speed:
///
///   Cn2(h) = 0.00594 (v/27)^2 (1e-5 h)^10 exp(-h/1000)
///          + 2.7e-16 exp(-h/1500) + A exp(-h/100),   h in meters.
struct TurbulenceProfile {
    double wind_speed_mps = 60.0;
    double ground_cn2 = 1.7e-14;  ///< A, in m^(-2/3)

    void validate() const;
    double cn2_at(double altitude_m) const;

    bool operator==(const TurbulenceProfile&) const = default;
};

/// Any altitude (m) -> Cn2 (m^(-2/3)) function.
using Cn2Profile = std::function<double(double)>;

struct OpticalBeam {
    double wavelength_m = 1550e-9;
    double aperture_diameter_m = 0.1;

    void validate() const;
    /// 2 pi / wavelength, rad/m.
    double wavenumber() const noexcept;

    bool operator==(const OpticalBeam&) const = default;
};

/// Aperture-averaged scintillation index of the satellite-to-HAPS hop:
///
///   8.7 k^(7/6) (H - h)^(5/6) sec^(11/6)(zeta)
///     * Re{ int_h^H Cn2(w) [ (a + i u(w))^(5/6) - a^(5/6) ] dw },
///
/// with a = k D^2 / (16 L), u(w) = (w - h) / (H - h) and the principal
/// branch of the complex power. The integral is taken in complex arithmetic
/// and its real part used afterwards.
double scintillation_uplink(const PathGeometry& geom, const OpticalBeam& beam, const Cn2Profile& cn2,
                            const numerics::QuadratureOptions& quad = {});
double scintillation_uplink(const PathGeometry& geom, const OpticalBeam& beam,
                            const TurbulenceProfile& profile, const numerics::QuadratureOptions& quad = {});

/// Scintillation index of the HAPS-to-satellite hop:
///
///   2.2 k^(7/6) (H - h)^(5/6) sec^(11/6)(zeta) int_h^H Cn2(w) (1 - u)^(5/6) u^(5/6) dw.
double scintillation_downlink(const PathGeometry& geom, const OpticalBeam& beam, const Cn2Profile& cn2,
                              const numerics::QuadratureOptions& quad = {});
double scintillation_downlink(const PathGeometry& geom, const OpticalBeam& beam,
                              const TurbulenceProfile& profile, const numerics::QuadratureOptions& quad = {});

}  // namespace stratolink
