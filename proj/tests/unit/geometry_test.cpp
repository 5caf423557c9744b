#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "stratolink/errors.hpp"
#include "stratolink/geometry.hpp"
#include "stratolink/units.hpp"

using namespace stratolink;

TEST(Geometry, SlantPathAtSeventyDegrees)
{
    const PathGeometry geom{500e3, 22e3, degrees_to_radians(70.0)};
    // 478 km / cos(70 deg), evaluated to 20 digits
    EXPECT_NEAR(slant_path_length(geom), 1397578.5032779557, 1e-6);
}

TEST(Geometry, ZenithZeroIsVerticalExtent)
{
    const PathGeometry geom{500e3, 22e3, 0.0};
    EXPECT_DOUBLE_EQ(slant_path_length(geom), 478e3);
    EXPECT_DOUBLE_EQ(geom.vertical_extent_m(), 478e3);
}

TEST(Geometry, GrowsWithZenith)
{
    double previous = 0.0;
    for (double deg = 0.0; deg < 89.0; deg += 1.0) {
        const double len = slant_path_length({500e3, 20e3, degrees_to_radians(deg)});
        EXPECT_GT(len, previous);
        previous = len;
    }
}

TEST(Geometry, RejectsInvalidInputs)
{
    EXPECT_THROW(slant_path_length({20e3, 22e3, 0.1}), DomainError);
    EXPECT_THROW(slant_path_length({22e3, 22e3, 0.1}), DomainError);
    EXPECT_THROW(slant_path_length({500e3, 0.0, 0.1}), DomainError);
    EXPECT_THROW(slant_path_length({500e3, 22e3, std::numbers::pi / 2}), DomainError);
    EXPECT_THROW(slant_path_length({500e3, 22e3, -0.01}), DomainError);
    EXPECT_THROW(slant_path_length({NAN, 22e3, 0.1}), DomainError);
}

TEST(Units, DecibelConversions)
{
    EXPECT_DOUBLE_EQ(db_to_linear(10.0), 10.0);
    EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
    EXPECT_NEAR(db_to_linear(7.0), 5.011872336272722, 1e-15);
    EXPECT_NEAR(linear_to_db(db_to_linear(-3.3)), -3.3, 1e-14);
    EXPECT_NEAR(radians_to_degrees(degrees_to_radians(61.0)), 61.0, 1e-13);
}
