#pragma once

// Perfectly-mixed tank model of recirculation flushing.
//
// With strong recirculation the flushed volume behaves as one homogeneous
// tank: flushing fluid enters at q, the same volumetric rate leaves at the
// tank composition, so the undesired-fluid fraction obeys
//
//   d(alpha)/dt = -(q / V) * alpha   =>   alpha(t) = alpha0 * exp(-q t / V)
//
// Densities of the two fluids cancel out of the balance, so none are needed.
// Rates are m3/h at this boundary; volumes m3, times s.

namespace subseaflush {

struct FlushSystem {
    double total_volume_m3 = 1.0;
    double initial_oil_fraction = 1.0;
    double target_oil_fraction = 0.01;

    // Throws ValidationError naming the violated invariant.
    void validate() const;
};

struct FlushSchedule {
    double injection_rate_m3h = 0.0;
    double duration_s = 0.0;

    void validate() const;
};

struct DimensionlessTime {
    double tau = 0.0;
};

double oil_fraction_at(const FlushSystem& system, const FlushSchedule& schedule);

DimensionlessTime dimensionless_time(const FlushSystem& system, const FlushSchedule& schedule);

// Leftover fraction for a given dimensionless time.
double oil_fraction_at_tau(const FlushSystem& system, DimensionlessTime tau);

// Time for the fraction to decay from initial to target at the given rate.
// Throws UnreachableTargetError when the target is zero.
double time_to_target(const FlushSystem& system, double injection_rate_m3h);

// Injected volume q*t needed to reach the target; independent of the rate.
double required_flush_volume(const FlushSystem& system);

// ln(initial / target), the dimensionless time needed to reach the target.
double required_tau(const FlushSystem& system);

} // namespace subseaflush
