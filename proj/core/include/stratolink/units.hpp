#pragma once

#include <cmath>
#include <numbers>

namespace stratolink {

inline constexpr double kMetersPerKilometer = 1000.0;

constexpr double degrees_to_radians(double degrees) noexcept
{
    return degrees * (std::numbers::pi / 180.0);
}

constexpr double radians_to_degrees(double radians) noexcept
{
    return radians * (180.0 / std::numbers::pi);
}

/// Power ratio in decibels to linear scale.
inline double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

inline double linear_to_db(double linear) noexcept
{
    return 10.0 * std::log10(linear);
}

}  // namespace stratolink
