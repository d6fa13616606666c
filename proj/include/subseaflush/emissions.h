#pragma once

// CO2 accounting for deck pumping and the traditional-vs-recirculation
// breakeven test.

#include "subseaflush/core_model.h"

#include <string>

namespace subseaflush {

struct EmissionFactor {
    double co2_t_per_mwh = 0.6;

    void validate() const;
};

struct PumpingDuty {
    double dp_pa = 0.0;
    double q_m3h = 0.0;
    double efficiency = 1.0;
    double duration_s = 0.0;

    void validate() const;
};

// (dp * q / eta) * t * F, with W*s converted to MWh.
double pumping_energy_mwh(const PumpingDuty& duty);
double pumping_co2(const PumpingDuty& duty, const EmissionFactor& factor);

enum class BreakevenVerdict { NewMethodEmitsLess, Equal, TraditionalEmitsLess };

const char* to_string(BreakevenVerdict v);

struct BreakevenReport {
    double traditional_volume_m3 = 0.0; // Q_trad * t_trad
    // 4.6 V for the all-oil, 1 % target case; ln(a0/target) V otherwise.
    double threshold_volume_m3 = 0.0;
    double generalized_threshold_m3 = 0.0; // ln(a0/target) V, always exact
    bool uses_rounded_constant = false;
    BreakevenVerdict verdict = BreakevenVerdict::Equal;
    bool new_method_emits_less = false;
};

// -ln(0.01) rounded to one decimal, the customary 1 % flushing constant.
inline constexpr double kOnePercentTau = 4.6;

// Compares both methods at equal deck-pump pressure boost, where CO2 reduces
// to injected volume. Throws UnreachableTargetError for a zero target.
BreakevenReport breakeven_new_vs_traditional(const PumpingDuty& traditional,
                                             const FlushSystem& system);

} // namespace subseaflush
