#include "stratolink/geometry.hpp"

#include <cmath>
#include <numbers>

#include "stratolink/errors.hpp"

namespace stratolink {

void PathGeometry::validate() const
{
    require(std::isfinite(haps_altitude_m) && haps_altitude_m > 0.0,
            "geometry: HAPS altitude must be positive");
    require(std::isfinite(sat_altitude_m) && sat_altitude_m > haps_altitude_m,
            "geometry: satellite altitude must exceed HAPS altitude");
    require(std::isfinite(zenith_rad) && zenith_rad >= 0.0 && zenith_rad < std::numbers::pi / 2.0,
            "geometry: zenith angle must lie in [0, 90) degrees");
}

double slant_path_length(const PathGeometry& geom)
{
    geom.validate();
    const double cos_zenith = std::cos(geom.zenith_rad);
    require(cos_zenith > 0.0, "geometry: zenith angle too close to the horizon");
    return geom.vertical_extent_m() / cos_zenith;
}

}  // namespace stratolink
