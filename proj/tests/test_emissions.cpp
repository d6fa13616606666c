#include "subseaflush/emissions.h"
#include "subseaflush/errors.h"

#include <cmath>
#include <gtest/gtest.h>
#include <random>

using namespace subseaflush;

namespace {

// Duty drawing `kw` of hydraulic power for `hours` at 1 m3/h.
PumpingDuty duty_kw(double kw, double hours)
{
    return PumpingDuty{kw * 1000.0 * 3600.0, 1.0, 1.0, hours * 3600.0};
}

} // namespace

TEST(PumpingCo2, ZeroDuration)
{
    EXPECT_DOUBLE_EQ(pumping_co2(duty_kw(700, 0), EmissionFactor{0.7}), 0.0);
}

TEST(PumpingCo2, ReviewAnchors)
{
    const EmissionFactor f{0.7};
    EXPECT_NEAR(pumping_energy_mwh(duty_kw(700, 2)), 1.4, 1e-12);
    EXPECT_NEAR(pumping_co2(duty_kw(700, 2), f), 0.98, 0.01);
    EXPECT_NEAR(pumping_co2(duty_kw(250, 4), f), 0.70, 0.01);
    const double reduction =
        1.0 - pumping_co2(duty_kw(250, 4), f) / pumping_co2(duty_kw(700, 2), f);
    EXPECT_NEAR(reduction, 0.2857, 1e-3);
}

TEST(PumpingCo2, EfficiencyScalesInversely)
{
    PumpingDuty d{5e7, 25.0, 1.0, 7200.0};
    const double base = pumping_co2(d, EmissionFactor{});
    d.efficiency = 0.5;
    EXPECT_NEAR(pumping_co2(d, EmissionFactor{}), 2.0 * base, 1e-12);
    d.efficiency = 0.0;
    EXPECT_THROW(pumping_co2(d, EmissionFactor{}), ValidationError);
    EXPECT_THROW(pumping_co2(duty_kw(1, 1), EmissionFactor{-0.1}), ValidationError);
}

TEST(Breakeven, BoundaryReportsEquality)
{
    const FlushSystem s{1.0, 1.0, 0.01};
    const auto r = breakeven_new_vs_traditional(PumpingDuty{1e7, 4.6, 1.0, 3600.0}, s);
    EXPECT_EQ(r.verdict, BreakevenVerdict::Equal);
    EXPECT_FALSE(r.new_method_emits_less);
    EXPECT_TRUE(r.uses_rounded_constant);
    EXPECT_DOUBLE_EQ(r.threshold_volume_m3, 4.6);
    EXPECT_NEAR(r.generalized_threshold_m3, std::log(100.0), 1e-12);
}

TEST(Breakeven, LargeTraditionalVolumeFavoursRecirculation)
{
    const FlushSystem s{2.0, 1.0, 0.01};
    const auto r = breakeven_new_vs_traditional(PumpingDuty{1e7, 20.0, 1.0, 3600.0}, s);
    EXPECT_EQ(r.verdict, BreakevenVerdict::NewMethodEmitsLess);
    EXPECT_TRUE(r.new_method_emits_less);
    const auto small = breakeven_new_vs_traditional(PumpingDuty{1e7, 1.0, 1.0, 3600.0}, s);
    EXPECT_EQ(small.verdict, BreakevenVerdict::TraditionalEmitsLess);
}

TEST(Breakeven, TenPercentTargetUsesExactLog)
{
    const FlushSystem s{3.0, 1.0, 0.1};
    const auto r = breakeven_new_vs_traditional(PumpingDuty{1e7, 1.0, 1.0, 3600.0}, s);
    EXPECT_FALSE(r.uses_rounded_constant);
    EXPECT_NEAR(r.threshold_volume_m3 / s.total_volume_m3, 2.303, 1e-3);
    EXPECT_DOUBLE_EQ(r.threshold_volume_m3, r.generalized_threshold_m3);
}

TEST(Breakeven, ZeroTargetIsUnreachable)
{
    EXPECT_THROW(breakeven_new_vs_traditional(PumpingDuty{1e7, 1.0, 1.0, 3600.0},
                                              FlushSystem{1.0, 1.0, 0.0}),
                 UnreachableTargetError);
}

TEST(Breakeven, VerdictAgreesWithCo2AtEqualPressure)
{
    // At equal deck pressure and efficiency CO2 is proportional to injected
    // volume, so the verdict must agree with a direct CO2 comparison.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> vol(0.05, 20.0), q(0.5, 50.0), t(60.0, 2e4),
        tgt(0.001, 0.5);
    const EmissionFactor f{};
    for (int i = 0; i < 300; ++i) {
        const FlushSystem s{vol(rng), 1.0, tgt(rng)};
        const PumpingDuty trad{3e7, q(rng), 0.8, t(rng)};
        const auto r = breakeven_new_vs_traditional(trad, s);
        PumpingDuty recirc = trad;
        recirc.q_m3h = 1.0;
        recirc.duration_s = r.threshold_volume_m3 * 3600.0;
        const double c_trad = pumping_co2(trad, f);
        const double c_new = pumping_co2(recirc, f);
        if (std::abs(c_trad - c_new) > 1e-9 * c_trad) {
            EXPECT_EQ(r.new_method_emits_less, c_new < c_trad);
        }
    }
}
