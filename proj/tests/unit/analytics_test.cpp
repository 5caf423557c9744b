#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stratolink/analytics.hpp"
#include "stratolink/errors.hpp"
#include "stratolink/random.hpp"

using namespace stratolink;

namespace {

HopLink exponential_hop()
{
    return {1.0, 1.0, {1.0, 2.0, 1.0}};
}

}  // namespace

TEST(SnrCdf, ExponentialReduction)
{
    const double gamma = std::pow(10.0, 0.7);
    EXPECT_NEAR(snr_cdf_direct(gamma, exponential_hop()), 1.0 - std::exp(-gamma), 1e-15);
    EXPECT_EQ(snr_cdf_direct(0.0, exponential_hop()), 0.0);
    EXPECT_THROW(snr_cdf_direct(-1.0, exponential_hop()), DomainError);
}

TEST(SnrCdf, ChangeOfVariablesFromIrradiance)
{
    PhiloxStream gen(5);
    for (int i = 0; i < 100; ++i) {
        const HopLink hop{std::pow(10.0, 3.0 * to_unit_interval(gen())),
                          0.05 + 0.95 * to_unit_interval(gen()),
                          {0.3 + 6.0 * to_unit_interval(gen()), 0.3 + 5.0 * to_unit_interval(gen()),
                           0.2 + to_unit_interval(gen())}};
        const double gamma = hop.avg_snr * std::pow(10.0, 2.0 * to_unit_interval(gen()) - 1.5);
        const double irradiance = std::sqrt(gamma / hop.avg_snr) / hop.attenuation_g;
        const double expected = oracle::ew_cdf(irradiance, hop.ew.alpha, hop.ew.beta, hop.ew.eta);
        EXPECT_NEAR(snr_cdf_direct(gamma, hop), expected, 1e-12);
        EXPECT_NEAR(snr_survival_direct(gamma, hop), 1.0 - expected, 1e-12);
    }
}

TEST(SnrCdf, SeriesIntegerAlphaTerminates)
{
    const HopLink hop{1.0, 1.0, {2.0, 1.5, 1.0}};
    const auto s = snr_cdf_series(0.8, hop);
    EXPECT_EQ(s.terms_used, 3);
    EXPECT_NEAR(s.value, snr_cdf_direct(0.8, hop), 1e-15);
}

TEST(SnrCdf, SeriesMatchesDirect)
{
    const HopLink hop{1.0, 1.0, {3.2, 2.0, 1.0}};
    EXPECT_NEAR(snr_cdf_series(1.0, hop).value, snr_cdf_direct(1.0, hop), 1e-10);
    EXPECT_EQ(snr_cdf_series(0.0, hop).value, 0.0);
}

TEST(Outage, IndependentExponentials)
{
    for (double th : {0.01, 0.5, 2.0}) {
        const auto p = outage_ss1(exponential_hop(), exponential_hop(), th);
        EXPECT_NEAR(p.value, 1.0 - std::exp(-2.0 * th), 1e-15);
        EXPECT_EQ(p.method, OutageMethod::ClosedForm);
        EXPECT_FALSE(p.std_error.has_value());
        EXPECT_FALSE(p.terms_used.has_value());
    }
}

TEST(Outage, SmallThresholdLimit)
{
    const auto p = outage_ss1(exponential_hop(), exponential_hop(), 1e-300);
    EXPECT_NEAR(p.value, 2e-300, 1e-313);
}

TEST(Outage, SingleCandidateReducesToSsOne)
{
    const HopLink up{10.0, 0.9, {0.7, 3.0, 1.01}};
    const HopLink down{10.0, 0.8, {1.3, 1.8, 0.95}};
    const HopLink one[] = {down};
    for (double th : {0.5, 3.0, 8.0}) {
        EXPECT_EQ(outage_ss2(up, one, th).value, outage_ss1(up, down, th).value);
    }
}

TEST(Outage, VanishingCandidateLeavesUplink)
{
    const HopLink up{10.0, 0.9, {0.7, 3.0, 1.01}};
    const HopLink dead_sure{1e300, 1.0, {5.0, 2.0, 1.0}};
    const HopLink other{10.0, 0.8, {1.3, 1.8, 0.95}};
    const HopLink candidates[] = {other, dead_sure};
    EXPECT_EQ(outage_ss2(up, candidates, 3.0).value, snr_cdf_direct(3.0, up));
}

TEST(Outage, NaiveFormulaWhereNoCancellation)
{
    const HopLink up{4.0, 0.9, {0.7, 3.0, 1.01}};
    const std::vector<HopLink> downs{{4.0, 0.8, {1.3, 1.8, 0.95}}, {4.0, 0.7, {2.3, 1.1, 0.9}},
                                     {4.0, 0.95, {0.9, 2.5, 1.0}}};
    const double th = 2.0;
    const double fa = oracle::ew_cdf(std::sqrt(th / 4.0) / 0.9, 0.7, 3.0, 1.01);
    double prod = 1.0;
    for (const auto& d : downs) {
        prod *= oracle::ew_cdf(std::sqrt(th / 4.0) / d.attenuation_g, d.ew.alpha, d.ew.beta, d.ew.eta);
    }
    const double fb = oracle::ew_cdf(std::sqrt(th / 4.0) / 0.8, 1.3, 1.8, 0.95);
    EXPECT_NEAR(outage_ss1(up, downs[0], th).value, 1.0 - (1.0 - fa) * (1.0 - fb), 1e-14);
    EXPECT_NEAR(outage_ss2(up, downs, th).value, 1.0 - (1.0 - fa) * (1.0 - prod), 1e-14);
}

TEST(Outage, SeriesParity)
{
    const HopLink up{4.0, 0.9, {0.7, 3.0, 1.01}};
    const std::vector<HopLink> downs{{4.0, 0.8, {1.3, 1.8, 0.95}}, {4.0, 0.7, {2.3, 1.1, 0.9}}};
    for (double th : {0.2, 1.0, 3.0}) {
        const auto s1 = outage_ss1(up, downs[0], th, OutageMethod::Series);
        EXPECT_EQ(s1.method, OutageMethod::Series);
        ASSERT_TRUE(s1.terms_used.has_value());
        EXPECT_GT(*s1.terms_used, 0);
        EXPECT_NEAR(s1.value, outage_ss1(up, downs[0], th).value, 1e-10);
        EXPECT_NEAR(outage_ss2(up, downs, th, OutageMethod::Series).value, outage_ss2(up, downs, th).value, 1e-10);
    }
    EXPECT_THROW(outage_ss1(up, downs[0], 1.0, OutageMethod::MonteCarlo), DomainError);
}

TEST(Outage, NonincreasingInAverageSnr)
{
    const HopLink up{1.0, 0.9, {0.7, 3.0, 1.01}};
    const std::vector<HopLink> downs{{1.0, 0.8, {1.3, 1.8, 0.95}}, {1.0, 0.7, {2.3, 1.1, 0.9}}};
    double last1 = 1.0;
    double last2 = 1.0;
    for (double db = -10.0; db <= 40.0; db += 0.5) {
        const double s = std::pow(10.0, db / 10.0);
        std::vector<HopLink> scaled;
        for (const auto& d : downs) {
            scaled.push_back(d.with_avg_snr(s));
        }
        const double p1 = outage_ss1(up.with_avg_snr(s), scaled[0], 5.0).value;
        const double p2 = outage_ss2(up.with_avg_snr(s), scaled, 5.0).value;
        EXPECT_LE(p1, last1);
        EXPECT_LE(p2, last2);
        EXPECT_LE(p2, p1);
        EXPECT_GE(p2, 0.0);
        last1 = p1;
        last2 = p2;
    }
}

TEST(Outage, AddingCandidatesNeverHurts)
{
    const HopLink up{8.0, 0.9, {0.7, 3.0, 1.01}};
    std::vector<HopLink> downs;
    double last = 1.0;
    for (int k = 0; k < 6; ++k) {
        downs.push_back({8.0, 0.6 + 0.05 * k, {0.5 + 0.3 * k, 1.0 + 0.2 * k, 1.0}});
        const double p = outage_ss2(up, downs, 3.0).value;
        EXPECT_LE(p, last);
        last = p;
    }
    EXPECT_THROW(outage_ss2(up, {}, 3.0), DomainError);
}

TEST(DiversityGain, LiteralExamples)
{
    const double two[] = {2.0};
    const double pair[] = {2.0, 3.0};
    const double triple[] = {2.0, 3.0, 4.0};
    EXPECT_EQ(diversity_gain_paper(Strategy::MinZenith, 5.0, two), 2.0);
    EXPECT_EQ(diversity_gain_paper(Strategy::MaxSnr, 1.0, pair), 2.0);
    EXPECT_EQ(diversity_gain_paper(Strategy::MaxSnr, 5.0, triple), 9.0);
    EXPECT_THROW(diversity_gain_paper(Strategy::MinZenith, 5.0, pair), DomainError);
    EXPECT_THROW(diversity_gain_paper(Strategy::MaxSnr, -1.0, pair), DomainError);
}

TEST(EmpiricalSlope, PowerLaws)
{
    for (double d : {1.0, 2.0, 0.37}) {
        std::vector<CurvePoint> curve;
        for (double db = 0.0; db <= 30.0; db += 2.0) {
            const double s = std::pow(10.0, db / 10.0);
            curve.push_back({s, 3e-2 * std::pow(s, -d)});
        }
        EXPECT_NEAR(empirical_slope(curve), d, 1e-12);
    }
}

TEST(EmpiricalSlope, UsesUpperHalf)
{
    // slope 1 below 10 dB, slope 3 above
    std::vector<CurvePoint> curve;
    for (double db = 0.0; db <= 20.0; db += 1.0) {
        const double s = std::pow(10.0, db / 10.0);
        curve.push_back({s, db <= 10.0 ? 1.0 / s : 1e-1 * std::pow(s / 10.0, -3.0)});
    }
    EXPECT_NEAR(empirical_slope(curve), 3.0, 1e-12);
}

TEST(EmpiricalSlope, RejectsDegenerateCurves)
{
    const std::vector<CurvePoint> zero{{1.0, 0.1}, {10.0, 0.0}};
    const std::vector<CurvePoint> unsorted{{10.0, 0.1}, {1.0, 0.2}};
    const std::vector<CurvePoint> single{{1.0, 0.1}};
    EXPECT_THROW(empirical_slope(zero), DomainError);
    EXPECT_THROW(empirical_slope(unsorted), DomainError);
    EXPECT_THROW(empirical_slope(single), DomainError);
}
