#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stratolink/atmosphere.hpp"
#include "stratolink/errors.hpp"
#include "stratolink/units.hpp"

using namespace stratolink;

namespace {

PathGeometry table1(double zenith_deg)
{
    return {500e3, 22e3, degrees_to_radians(zenith_deg)};
}

// Scintillation indices of the default paths, from 20-digit quadrature.
struct Golden {
    double zenith_deg;
    double uplink;
    double downlink;
};
constexpr Golden kGolden[] = {
    {61.0, 2.8705219217300826e-04, 7.2735164060432029e-04},
    {66.0, 4.3556601296393742e-04, 1.0035768304677513e-03},
    {70.0, 6.5216713064525891e-04, 1.3788920073940979e-03},
    {73.0, 9.3376191507886714e-04, 1.8382738932350286e-03},
    {77.0, 1.6797824272038955e-03, 2.9725576232496023e-03},
    {81.0, 3.7012606357005890e-03, 5.7856061613293939e-03},
};

}  // namespace

TEST(Attenuation, RegimePresets)
{
    EXPECT_DOUBLE_EQ(stratospheric_extinction(VolcanicRegime::Moderate), 1e-4);
    EXPECT_DOUBLE_EQ(stratospheric_extinction(VolcanicRegime::High), 1e-3);
    EXPECT_DOUBLE_EQ(stratospheric_extinction(VolcanicRegime::Extreme), 4e-3);
    const auto c = coefficients_for(VolcanicRegime::High, 0.1);
    EXPECT_DOUBLE_EQ(c.meso_per_km, 1e-5);
    EXPECT_DOUBLE_EQ(c.strato_per_km, 1e-3);
    EXPECT_DOUBLE_EQ(c.rho_fraction, 0.1);
}

TEST(Attenuation, RegimeNames)
{
    for (auto r : {VolcanicRegime::Moderate, VolcanicRegime::High, VolcanicRegime::Extreme}) {
        EXPECT_EQ(parse_volcanic_regime(to_string(r)), r);
    }
    EXPECT_FALSE(parse_volcanic_regime("severe").has_value());
}

TEST(Attenuation, Transmittance)
{
    EXPECT_DOUBLE_EQ(transmittance(coefficients_for(VolcanicRegime::Moderate, 0.1), 0.0), 1.0);
    // exp(-(1e-5 * 139.763 + 1e-4 * 1257.867)) and the 4e-3 counterpart
    EXPECT_NEAR(transmittance(coefficients_for(VolcanicRegime::Moderate, 0.1), 1397.63), 0.88057134192095351, 1e-14);
    EXPECT_NEAR(transmittance(coefficients_for(VolcanicRegime::Extreme, 0.1), 1397.63), 6.5200995810045626e-3, 1e-16);
}

TEST(Attenuation, RhoSplitsThePath)
{
    const AttenuationCoefficients all_meso{2e-3, 5e-3, 1.0};
    EXPECT_NEAR(transmittance(all_meso, 100.0), std::exp(-0.2), 1e-15);
    const AttenuationCoefficients all_strato{2e-3, 5e-3, 0.0};
    EXPECT_NEAR(transmittance(all_strato, 100.0), std::exp(-0.5), 1e-15);
}

TEST(Attenuation, RejectsInvalid)
{
    EXPECT_THROW(transmittance({-1e-5, 1e-4, 0.1}, 10.0), DomainError);
    EXPECT_THROW(transmittance({1e-5, 1e-4, 1.5}, 10.0), DomainError);
    EXPECT_THROW(transmittance({1e-5, 1e-4, 0.1}, -1.0), DomainError);
}

TEST(Turbulence, HufnagelValley)
{
    const TurbulenceProfile p;
    EXPECT_NEAR(p.cn2_at(0.0), 1.7e-14 + 2.7e-16, 1e-30);
    for (double h : {100.0, 5e3, 10e3, 22e3, 60e3}) {
        EXPECT_NEAR(p.cn2_at(h), oracle::hufnagel_valley(h, 60.0, 1.7e-14), 1e-12 * p.cn2_at(h));
    }
    EXPECT_THROW(p.cn2_at(-1.0), DomainError);
    EXPECT_THROW((TurbulenceProfile{0.0, 1.7e-14}.validate()), DomainError);
}

TEST(Scintillation, TableOneGoldenValues)
{
    for (const auto& g : kGolden) {
        const auto geom = table1(g.zenith_deg);
        EXPECT_NEAR(scintillation_uplink(geom, {}, TurbulenceProfile{}), g.uplink, 1e-7 * g.uplink) << g.zenith_deg;
        EXPECT_NEAR(scintillation_downlink(geom, {}, TurbulenceProfile{}), g.downlink, 1e-7 * g.downlink)
            << g.zenith_deg;
    }
}

TEST(Scintillation, AgreesWithFixedGridSimpson)
{
    for (const auto& g : kGolden) {
        oracle::Link link;
        link.zenith_deg = g.zenith_deg;
        const auto geom = table1(g.zenith_deg);
        const double up = scintillation_uplink(geom, {}, TurbulenceProfile{});
        const double down = scintillation_downlink(geom, {}, TurbulenceProfile{});
        EXPECT_NEAR(up / oracle::scintillation_simpson(link, true), 1.0, 1e-9);
        EXPECT_NEAR(down / oracle::scintillation_simpson(link, false), 1.0, 1e-9);
    }
}

TEST(Scintillation, ConstantProfileClosedForms)
{
    const double c = 1e-17;
    const Cn2Profile flat = [c](double) { return c; };
    const OpticalBeam beam;
    const PathGeometry geom{40e3, 20e3, degrees_to_radians(30.0)};
    const double extent = geom.vertical_extent_m();
    const double k = beam.wavenumber();
    const double sec = 1.0 / std::cos(geom.zenith_rad);
    const double scale = std::pow(k, 7.0 / 6.0) * std::pow(extent, 5.0 / 6.0) * std::pow(sec, 11.0 / 6.0) * c * extent;

    const double beta_fn = std::tgamma(11.0 / 6.0) * std::tgamma(11.0 / 6.0) / std::tgamma(11.0 / 3.0);
    EXPECT_NEAR(scintillation_downlink(geom, beam, flat), 2.2 * scale * beta_fn,
                1e-9 * 2.2 * scale * beta_fn);

    const double a = k * beam.aperture_diameter_m * beam.aperture_diameter_m / (16.0 * extent * sec);
    const std::complex<double> primitive =
        (std::pow(std::complex<double>(a, 1.0), 11.0 / 6.0) - std::pow(a, 11.0 / 6.0)) /
        std::complex<double>(0.0, 11.0 / 6.0);
    const double expected = 8.7 * scale * (primitive.real() - std::pow(a, 5.0 / 6.0));
    EXPECT_NEAR(scintillation_uplink(geom, beam, flat), expected, 1e-9 * expected);
}

TEST(Scintillation, DownlinkScalesAsSecantPower)
{
    const double a = scintillation_downlink(table1(61.0), {}, TurbulenceProfile{});
    const double b = scintillation_downlink(table1(77.0), {}, TurbulenceProfile{});
    const double ratio = std::pow(std::cos(degrees_to_radians(61.0)) / std::cos(degrees_to_radians(77.0)), 11.0 / 6.0);
    EXPECT_NEAR(b / a, ratio, 1e-9 * ratio);
}

TEST(Scintillation, IncreasesWithZenith)
{
    double up = 0.0;
    double down = 0.0;
    for (double z = 0.0; z <= 85.0; z += 5.0) {
        const double u = scintillation_uplink(table1(z), {}, TurbulenceProfile{});
        const double d = scintillation_downlink(table1(z), {}, TurbulenceProfile{});
        EXPECT_GT(u, up);
        EXPECT_GT(d, down);
        up = u;
        down = d;
    }
}

TEST(Scintillation, RejectsLooseTolerance)
{
    EXPECT_THROW(scintillation_downlink(table1(61.0), {}, TurbulenceProfile{}, {0.0}), DomainError);
    EXPECT_THROW(scintillation_downlink(table1(61.0), {}, TurbulenceProfile{}, {0.1}), DomainError);
    EXPECT_THROW(scintillation_uplink({500e3, 22e3, 1.6}, {}, TurbulenceProfile{}), DomainError);
    EXPECT_THROW(scintillation_uplink(table1(61.0), {1550e-9, 0.0}, TurbulenceProfile{}), DomainError);
}
