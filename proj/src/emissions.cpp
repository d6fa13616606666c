#include "subseaflush/emissions.h"

#include "subseaflush/errors.h"
#include "subseaflush/units.h"

#include <cmath>

namespace subseaflush {

namespace {

// Relative tolerance for the equal-volume boundary; covers the m3/h to m3/s
// conversion round-off only.
constexpr double kBoundaryRelTol = 1e-12;

} // namespace

void EmissionFactor::validate() const
{
    if (!(co2_t_per_mwh >= 0.0)) {
        throw ValidationError("emission.co2_t_per_mwh must be >= 0");
    }
}

void PumpingDuty::validate() const
{
    if (!(dp_pa >= 0.0)) {
        throw ValidationError("duty.dp_pa must be >= 0");
    }
    if (!(q_m3h >= 0.0)) {
        throw ValidationError("duty.q_m3h must be >= 0");
    }
    if (!(efficiency > 0.0 && efficiency <= 1.0)) {
        throw ValidationError("duty.efficiency must be in (0, 1]");
    }
    if (!(duration_s >= 0.0)) {
        throw ValidationError("duty.duration_s must be >= 0");
    }
}

double pumping_energy_mwh(const PumpingDuty& duty)
{
    duty.validate();
    const double power_w = duty.dp_pa * units::m3h_to_m3s(duty.q_m3h) / duty.efficiency;
    return power_w * duty.duration_s / units::kJoulePerMWh;
}

double pumping_co2(const PumpingDuty& duty, const EmissionFactor& factor)
{
    factor.validate();
    return pumping_energy_mwh(duty) * factor.co2_t_per_mwh;
}

const char* to_string(BreakevenVerdict v)
{
    switch (v) {
    case BreakevenVerdict::NewMethodEmitsLess:
        return "new-method-emits-less";
    case BreakevenVerdict::Equal:
        return "equal";
    case BreakevenVerdict::TraditionalEmitsLess:
        return "traditional-emits-less";
    }
    return "equal";
}

BreakevenReport breakeven_new_vs_traditional(const PumpingDuty& traditional,
                                             const FlushSystem& system)
{
    traditional.validate();
    BreakevenReport r;
    r.generalized_threshold_m3 = required_flush_volume(system);
    r.uses_rounded_constant =
        system.initial_oil_fraction == 1.0 && system.target_oil_fraction == 0.01;
    r.threshold_volume_m3 = r.uses_rounded_constant ? kOnePercentTau * system.total_volume_m3
                                                    : r.generalized_threshold_m3;
    r.traditional_volume_m3 = units::m3h_to_m3s(traditional.q_m3h) * traditional.duration_s;

    const double diff = r.traditional_volume_m3 - r.threshold_volume_m3;
    if (std::abs(diff) <= kBoundaryRelTol * r.threshold_volume_m3) {
        r.verdict = BreakevenVerdict::Equal;
    } else if (diff > 0.0) {
        r.verdict = BreakevenVerdict::NewMethodEmitsLess;
    } else {
        r.verdict = BreakevenVerdict::TraditionalEmitsLess;
    }
    r.new_method_emits_less = r.verdict == BreakevenVerdict::NewMethodEmitsLess;
    return r;
}

} // namespace subseaflush
