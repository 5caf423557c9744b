#include "stratolink/scenario.hpp"

#include <cmath>
#include <string>

#include "stratolink/errors.hpp"
#include "stratolink/units.hpp"

namespace stratolink {

namespace {

void check(bool condition, const std::string& field, const char* rule)
{
    if (!condition) {
        throw DomainError(field + ": " + rule);
    }
}

bool finite(double x)
{
    return std::isfinite(x);
}

constexpr std::size_t kMaxGridPoints = 100'000;

}  // namespace

std::vector<double> expand_grid(const DbGrid& grid)
{
    if (const auto* values = std::get_if<std::vector<double>>(&grid)) {
        return *values;
    }
    const auto& range = std::get<DbRange>(grid);
    check(finite(range.start) && finite(range.stop) && finite(range.step), "run.gamma_bar_db", "range must be finite");
    check(range.step > 0.0, "run.gamma_bar_db.step", "must be positive");
    check(range.stop >= range.start, "run.gamma_bar_db.stop", "must not be below start");
    const double span = (range.stop - range.start) / range.step;
    check(span < static_cast<double>(kMaxGridPoints), "run.gamma_bar_db", "range has too many points");
    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(range.start + static_cast<double>(i) * range.step);
    }
    return out;
}

void Scenario::validate() const
{
    check(finite(haps_altitude_km) && haps_altitude_km > 0.0, "geometry.h_haps_km", "must be positive");
    check(finite(sat_altitude_km) && sat_altitude_km > haps_altitude_km, "geometry.h_sat_km",
          "must exceed h_haps_km");
    check(finite(uplink_zenith_deg) && uplink_zenith_deg >= 0.0 && uplink_zenith_deg < 90.0,
          "geometry.zenith_ah_deg", "must lie in [0, 90)");
    check(!candidate_zenith_deg.empty(), "geometry.zenith_b_deg", "needs at least one satellite");
    for (std::size_t i = 0; i < candidate_zenith_deg.size(); ++i) {
        const double z = candidate_zenith_deg[i];
        check(finite(z) && z >= 0.0 && z < 90.0, "geometry.zenith_b_deg[" + std::to_string(i) + "]",
              "must lie in [0, 90)");
    }

    if (const auto* raw = std::get_if<RawExtinction>(&extinction)) {
        check(finite(raw->meso_per_km) && raw->meso_per_km >= 0.0, "atmosphere.theta1_per_km", "must be >= 0");
        check(finite(raw->strato_per_km) && raw->strato_per_km >= 0.0, "atmosphere.theta2_per_km", "must be >= 0");
    }
    check(rho_fraction >= 0.0 && rho_fraction <= 1.0, "atmosphere.rho_fraction", "must lie in [0, 1]");

    check(finite(wavelength_nm) && wavelength_nm > 0.0, "beam.wavelength_nm", "must be positive");
    check(finite(aperture_m) && aperture_m > 0.0, "beam.aperture_m", "must be positive");

    check(finite(wind_speed_mps) && wind_speed_mps > 0.0, "turbulence.v_g_mps", "must be positive");
    check(finite(ground_cn2) && ground_cn2 > 0.0, "turbulence.ground_A", "must be positive");

    const auto grid = expand_grid(gamma_bar_db);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        check(finite(grid[i]), "run.gamma_bar_db[" + std::to_string(i) + "]", "must be finite");
    }
    check(finite(gamma_th_db), "run.gamma_th_db", "must be finite");
    check(trials >= 1, "run.trials", "must be at least 1");
}

AttenuationCoefficients Scenario::attenuation() const
{
    if (const auto* regime = std::get_if<VolcanicRegime>(&extinction)) {
        return coefficients_for(*regime, rho_fraction);
    }
    const auto& raw = std::get<RawExtinction>(extinction);
    AttenuationCoefficients coeffs{raw.meso_per_km, raw.strato_per_km, rho_fraction};
    coeffs.validate();
    return coeffs;
}

PathGeometry Scenario::uplink_geometry() const
{
    PathGeometry geom{sat_altitude_km * kMetersPerKilometer, haps_altitude_km * kMetersPerKilometer,
                      degrees_to_radians(uplink_zenith_deg)};
    geom.validate();
    return geom;
}

PathGeometry Scenario::candidate_geometry(std::size_t position) const
{
    require(position < candidate_zenith_deg.size(), "scenario: candidate position out of range");
    PathGeometry geom{sat_altitude_km * kMetersPerKilometer, haps_altitude_km * kMetersPerKilometer,
                      degrees_to_radians(candidate_zenith_deg[position])};
    geom.validate();
    return geom;
}

OpticalBeam Scenario::beam() const
{
    OpticalBeam beam{wavelength_nm * 1e-9, aperture_m};
    beam.validate();
    return beam;
}

TurbulenceProfile Scenario::turbulence() const
{
    TurbulenceProfile profile{wind_speed_mps, ground_cn2};
    profile.validate();
    return profile;
}

double Scenario::gamma_th_linear() const
{
    return db_to_linear(gamma_th_db);
}

std::vector<double> Scenario::gamma_bar_grid_db() const
{
    return expand_grid(gamma_bar_db);
}

}  // namespace stratolink
