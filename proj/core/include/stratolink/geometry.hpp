#pragma once

namespace stratolink {

/// Straight slant path between a HAPS node and a satellite.
///
/// Altitudes are measured above ground in meters; the zenith angle is in
/// radians. The path is a flat slab: its length is the altitude difference
/// scaled by sec(zenith), with no Earth-curvature correction.
struct PathGeometry {
    double sat_altitude_m = 0.0;
    double haps_altitude_m = 0.0;
    double zenith_rad = 0.0;

    /// Throws DomainError unless sat > haps > 0 and 0 <= zenith < pi/2.
    void validate() const;

    /// Vertical extent of the path, h_sat - h_haps.
    double vertical_extent_m() const noexcept { return sat_altitude_m - haps_altitude_m; }

    bool operator==(const PathGeometry&) const = default;
};

/// Length of the slant path in meters, (h_sat - h_haps) / cos(zenith).
double slant_path_length(const PathGeometry& geom);

}  // namespace stratolink
