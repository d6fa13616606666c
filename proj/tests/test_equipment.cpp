#include "subseaflush/equipment.h"
#include "subseaflush/errors.h"
#include "subseaflush/units.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <gtest/gtest.h>
#include <random>

using namespace subseaflush;

namespace {

std::string write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST(ReelCapacity, DrumRuleHandArithmetic)
{
    const auto a = reel_capacity(ReelSpec{25, 50, 50, 0.086});
    EXPECT_NEAR(a.feet, 8062.5, 1e-9);
    EXPECT_NEAR(a.meters, 2457.45, 1e-6);
    EXPECT_NEAR(a.meters, 2444.6, 0.006 * 2444.6);

    const auto b = reel_capacity(ReelSpec{39, 50, 50, 0.046});
    EXPECT_NEAR(b.meters, 2433.31, 0.01);
    EXPECT_NEAR(b.meters, 2457.0, 0.01 * 2457.0);
}

TEST(ReelCapacity, DegenerateDrums)
{
    EXPECT_DOUBLE_EQ(reel_capacity(ReelSpec{25, 50, 50, 0.0}).feet, 0.0);
    EXPECT_DOUBLE_EQ(reel_capacity(ReelSpec{25, 0, 50, 0.086}).meters, 0.0);
    EXPECT_THROW(reel_capacity(ReelSpec{-1, 50, 50, 0.086}), ValidationError);
}

TEST(SpoolVolume, FullCylinder)
{
    EXPECT_NEAR(spool_volume(ReelSpec{25, 50, 50, 0.086}), 6.435, 0.001);
    EXPECT_NEAR(spool_volume(ReelSpec{39, 50, 50, 0.046}), 10.543, 0.001);
    // Empty drum: the core cylinder alone.
    const double core = units::kPi / 4.0 * 50.0 * 50.0 * 50.0 * std::pow(0.0254, 3);
    EXPECT_NEAR(spool_volume(ReelSpec{0, 50, 50, 0.086}), core, 1e-12);
}

TEST(LinearMass, SteelAnnulus)
{
    const auto& cat = ConduitCatalog::builtin();
    EXPECT_NEAR(conduit_linear_mass(cat.find("HV-70"), kSteelDensity), 3.232, 0.001);
    EXPECT_NEAR(conduit_linear_mass(cat.find("HV-70"), kSteelDensity) * 2444.6 / 1000.0, 7.90, 0.01);
    EXPECT_NEAR(conduit_linear_mass(cat.find("HS-70"), kSteelDensity), 6.53, 0.01);
    ConduitProduct solid = cat.find("HV-70");
    solid.internal_diameter_in = solid.outside_diameter_in;
    EXPECT_DOUBLE_EQ(conduit_linear_mass(solid, kSteelDensity), 0.0);
}

TEST(GeometricK, SquarePackingMatchesRoundedTable)
{
    const auto table = KFactorTable::builtin();
    for (const auto& e : table.entries()) {
        const double k = geometric_k_factor(e.outside_diameter_in);
        EXPECT_NEAR(k, units::kPi / (12.0 * e.outside_diameter_in * e.outside_diameter_in), 1e-15);
        // Published values are this rounded to three decimals, give or take one unit.
        EXPECT_NEAR(k, e.k_factor, 0.0012) << e.outside_diameter_in;
    }
}

TEST(Feasibility, Examples)
{
    const auto& cat = ConduitCatalog::builtin();
    const auto hv = pressure_feasibility(cat.find("HV-70"), units::bar_to_pa(600.0));
    EXPECT_FALSE(hv.pass);
    EXPECT_NEAR(units::pa_to_bar(hv.margin_pa), -90.0, 1e-9);
    EXPECT_TRUE(pressure_feasibility(cat.find("HV-70"), 0.0).pass);
    const auto hs = pressure_feasibility(cat.find("HS-70"), units::bar_to_pa(600.0));
    EXPECT_TRUE(hs.pass);
    EXPECT_NEAR(units::pa_to_bar(hs.margin_pa), 41.0, 1e-9);
    EXPECT_THROW(pressure_feasibility(cat.find("CT-3.0"), 1e5), ValidationError);
}

TEST(Feasibility, MonotoneInRequiredPressure)
{
    const auto& cat = ConduitCatalog::builtin();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dp(0.0, 2e8);
    for (const auto& p : cat.products()) {
        if (!p.max_working_pressure_pa) {
            continue;
        }
        for (int i = 0; i < 100; ++i) {
            const double a = dp(rng);
            const double b = dp(rng);
            const double lo = std::min(a, b);
            const double hi = std::max(a, b);
            if (pressure_feasibility(p, hi).pass) {
                EXPECT_TRUE(pressure_feasibility(p, lo).pass);
            }
        }
    }
}

TEST(Catalog, BuiltinProducts)
{
    const auto cat = ConduitCatalog::builtin();
    EXPECT_EQ(cat.products().size(), 12u);
    EXPECT_NEAR(units::pa_to_bar(*cat.find("HV-70").max_working_pressure_pa), 510.0, 1e-9);
    EXPECT_NEAR(units::pa_to_bar(*cat.find("HS-70").max_working_pressure_pa), 641.0, 1e-9);
    EXPECT_NEAR(*cat.find("COFLEXIP-1.5-15K").max_working_pressure_pa, 15000 * 6894.757293168361,
                1e-3);
    EXPECT_EQ(cat.find("COFLEXIP-4.0-5K").kind, ConduitKind::FlexibleSteelPipe);
    EXPECT_THROW(cat.find("NOPE"), ValidationError);
}

TEST(Catalog, CsvRoundTrip)
{
    const auto cat = ConduitCatalog::builtin();
    const auto again = ConduitCatalog::parse_csv(cat.to_csv(), "roundtrip");
    EXPECT_EQ(again.to_csv(), cat.to_csv());
}

TEST(Catalog, ShippedDataFilesMatchBuiltin)
{
    const std::string dir = SUBSEAFLUSH_DATA_DIR;
    EXPECT_EQ(ConduitCatalog::load_csv(dir + "/catalog.csv").to_csv(),
              ConduitCatalog::builtin().to_csv());
    const auto loaded = KFactorTable::load_csv(dir + "/k_factors.csv");
    const auto builtin = KFactorTable::builtin();
    ASSERT_EQ(loaded.entries().size(), builtin.entries().size());
    for (const auto& e : builtin.entries()) {
        EXPECT_EQ(loaded.lookup(e.outside_diameter_in), e.k_factor);
    }
}

TEST(Catalog, LoadErrors)
{
    EXPECT_THROW(ConduitCatalog::load_csv("/nonexistent/catalog.csv"), IoError);
    const auto bad_header = write_temp("sf_bad_header.csv", "name,id_in\nX,1\n");
    EXPECT_THROW(ConduitCatalog::load_csv(bad_header), ValidationError);
    const auto bad_number = write_temp(
        "sf_bad_number.csv", "name,id_in,od_in,kind,max_wp_bar,k_factor\nX,abc,2,coiled-tubing,,\n");
    EXPECT_THROW(ConduitCatalog::load_csv(bad_number), ValidationError);
    const auto bad_kind = write_temp(
        "sf_bad_kind.csv", "name,id_in,od_in,kind,max_wp_bar,k_factor\nX,1,2,hose,,\n");
    EXPECT_THROW(ConduitCatalog::load_csv(bad_kind), ValidationError);
    const auto inverted = write_temp(
        "sf_inverted.csv", "name,id_in,od_in,kind,max_wp_bar,k_factor\nX,2,1,coiled-tubing,,\n");
    EXPECT_THROW(ConduitCatalog::load_csv(inverted), ValidationError);
}

TEST(KFactor, ResolutionOrder)
{
    auto p = ConduitCatalog::builtin().find("HV-70");
    const auto table = KFactorTable::builtin();
    EXPECT_NEAR(resolve_k_factor(p, KFactorSource::Geometric, table), geometric_k_factor(1.75),
                1e-15);
    EXPECT_DOUBLE_EQ(resolve_k_factor(p, KFactorSource::Table, table), 0.086);
    p.outside_diameter_in = 1.8;
    EXPECT_NEAR(resolve_k_factor(p, KFactorSource::Table, table), geometric_k_factor(1.8), 1e-15);
    p.k_factor = 0.05;
    EXPECT_DOUBLE_EQ(resolve_k_factor(p, KFactorSource::Table, table), 0.05);
    EXPECT_DOUBLE_EQ(resolve_k_factor(p, KFactorSource::Geometric, table), 0.05);
}

TEST(SizeReel, FlagsShortCapacity)
{
    const auto p = ConduitCatalog::builtin().find("HV-70");
    const auto spec = reel_spec_for(p, KFactorSource::Geometric, KFactorTable::builtin());
    const auto ok = size_reel(p, spec, kSteelDensity, 2400.0);
    EXPECT_FALSE(ok.capacity_short);
    EXPECT_NEAR(ok.total_mass_t, ok.linear_mass_kg_m * ok.capacity.meters / 1000.0, 1e-12);
    EXPECT_TRUE(size_reel(p, spec, kSteelDensity, 2500.0).capacity_short);
}
