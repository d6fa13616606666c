#include "subseaflush/core_model.h"

#include "subseaflush/errors.h"
#include "subseaflush/units.h"

#include <cmath>
#include <string>

namespace subseaflush {

void FlushSystem::validate() const
{
    if (!(total_volume_m3 > 0.0)) {
        throw ValidationError("system.total_volume_m3 must be > 0");
    }
    if (!(initial_oil_fraction > 0.0 && initial_oil_fraction <= 1.0)) {
        throw ValidationError("system.initial_oil_fraction must be in (0, 1]");
    }
    if (!(target_oil_fraction >= 0.0)) {
        throw ValidationError("system.target_oil_fraction must be >= 0");
    }
    if (target_oil_fraction > initial_oil_fraction) {
        throw ValidationError(
            "system.target_oil_fraction must not exceed system.initial_oil_fraction");
    }
}

void FlushSchedule::validate() const
{
    if (!(injection_rate_m3h > 0.0)) {
        throw ValidationError("schedule.injection_rate_m3h must be > 0");
    }
    if (!(duration_s >= 0.0)) {
        throw ValidationError("schedule.duration_s must be >= 0");
    }
}

DimensionlessTime dimensionless_time(const FlushSystem& system, const FlushSchedule& schedule)
{
    system.validate();
    schedule.validate();
    const double q = units::m3h_to_m3s(schedule.injection_rate_m3h);
    return {q * schedule.duration_s / system.total_volume_m3};
}

double oil_fraction_at_tau(const FlushSystem& system, DimensionlessTime tau)
{
    system.validate();
    if (!(tau.tau >= 0.0)) {
        throw ValidationError("tau must be >= 0");
    }
    return system.initial_oil_fraction * std::exp(-tau.tau);
}

double oil_fraction_at(const FlushSystem& system, const FlushSchedule& schedule)
{
    return oil_fraction_at_tau(system, dimensionless_time(system, schedule));
}

double required_tau(const FlushSystem& system)
{
    system.validate();
    if (system.target_oil_fraction == 0.0) {
        throw UnreachableTargetError(
            "unreachable target: system.target_oil_fraction = 0 is never reached by exponential decay");
    }
    return std::log(system.initial_oil_fraction / system.target_oil_fraction);
}

double time_to_target(const FlushSystem& system, double injection_rate_m3h)
{
    const double tau = required_tau(system);
    if (!(injection_rate_m3h > 0.0)) {
        throw ValidationError("injection_rate_m3h must be > 0");
    }
    return tau * system.total_volume_m3 / units::m3h_to_m3s(injection_rate_m3h);
}

double required_flush_volume(const FlushSystem& system)
{
    return required_tau(system) * system.total_volume_m3;
}

} // namespace subseaflush
