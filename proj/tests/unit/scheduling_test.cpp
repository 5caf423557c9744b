#include <vector>

#include <gtest/gtest.h>

#include "stratolink/errors.hpp"
#include "stratolink/scheduling.hpp"
#include "stratolink/units.hpp"

using namespace stratolink;

TEST(Scheduling, MinZenithOnTableOneList)
{
    std::vector<double> zeniths;
    for (double deg : {81.0, 73.0, 66.0, 77.0, 61.0}) {
        zeniths.push_back(degrees_to_radians(deg));
    }
    EXPECT_EQ(select_min_zenith(zeniths), 4u);
}

TEST(Scheduling, TiesGoToFirst)
{
    const std::vector<double> zeniths{0.5, 0.2, 0.2, 0.9};
    EXPECT_EQ(select_min_zenith(zeniths), 1u);
    const std::vector<double> snrs{3.0, 7.0, 1.0, 7.0};
    EXPECT_EQ(select_max_snr(snrs), 1u);
}

TEST(Scheduling, CandidateOverload)
{
    std::vector<CandidateSatellite> c{
        {1, 0.9, {1.0, 2.0, 1.0}, 0.9, 1.0},
        {2, 0.3, {1.0, 2.0, 1.0}, 0.9, 1.0},
        {3, 0.6, {1.0, 2.0, 1.0}, 0.9, 1.0},
    };
    EXPECT_EQ(select_min_zenith(c), 1u);
    c[1].zenith_rad = 2.0;
    EXPECT_THROW(select_min_zenith(c), DomainError);
}

TEST(Scheduling, EmptyInputsThrow)
{
    EXPECT_THROW(select_min_zenith(std::span<const double>{}), DomainError);
    EXPECT_THROW(select_max_snr({}), DomainError);
    EXPECT_THROW(scheduled_params_ss1(std::span<const EwParams>{}), DomainError);
}

TEST(Scheduling, ExtremaParameters)
{
    const std::vector<EwParams> params{{0.5, 80.0, 1.02}, {0.4, 90.0, 1.01}, {0.6, 70.0, 1.03}};
    const auto p = scheduled_params_ss1(params);
    EXPECT_EQ(p.alpha, 0.4);
    EXPECT_EQ(p.beta, 90.0);
    EXPECT_EQ(p.eta, 1.03);
}

TEST(Scheduling, Names)
{
    EXPECT_EQ(parse_strategy("ss1"), Strategy::MinZenith);
    EXPECT_EQ(parse_strategy("ss2"), Strategy::MaxSnr);
    EXPECT_FALSE(parse_strategy("both").has_value());
    EXPECT_EQ(to_string(Strategy::MaxSnr), "ss2");
    EXPECT_EQ(parse_ss1_rule("extrema"), Ss1ParamRule::Extrema);
    EXPECT_EQ(parse_ss1_rule(to_string(Ss1ParamRule::MinZenithFit)), Ss1ParamRule::MinZenithFit);
}
