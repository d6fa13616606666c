#pragma once

// Flow-split sweeps, method comparison and model-vs-measurement fits.

#include "subseaflush/core_model.h"
#include "subseaflush/emissions.h"
#include "subseaflush/equipment.h"
#include "subseaflush/hydraulics.h"

#include <optional>
#include <string>
#include <vector>

namespace subseaflush {

// Injected rates Q1 of the reference 25 m3/h split table.
std::vector<double> default_q1_values();

struct SweepDefinition {
    double total_target_rate_m3h = 25.0;
    std::vector<double> q1_values_m3h = default_q1_values();
    std::vector<double> injection_ids_in = {1.5, 2.0, 3.0, 4.0};

    // Loop template; the injection bore is replaced per sweep column.
    ReferenceLoopParams loop;
    FluidProperties fluid;
    MachineEfficiencies efficiencies;
    LoopSolverOptions solver;

    FlushSystem system;
    EmissionFactor emission;
    // Single-pass flushing has no analytic displacement law; its duration is
    // an input.
    double single_pass_duration_s = 7200.0;
    ConduitCatalog catalog = ConduitCatalog::builtin();

    // Evaluate cases on worker threads. Results keep input order either way.
    bool parallel = true;

    void validate() const;
};

enum class CaseStatus { Ok, ConvergenceFailure, Infeasible };

const char* to_string(CaseStatus s);

struct ScenarioResult {
    FlowCase flow;
    double injection_id_in = 0.0;
    CaseStatus status = CaseStatus::Ok;
    std::string failure;

    NodePressureMap nodes;
    double deck_dp_pa = 0.0;
    double deck_power_w = 0.0;
    double subsea_dp_pa = 0.0;
    double subsea_power_w = 0.0;
    // Unset for single-pass cases (not modeled).
    std::optional<double> flushing_time_to_target_s;
    double flushing_duration_s = 0.0;
    double injected_volume_m3 = 0.0;
    double co2_t = 0.0;
    // Rated catalog products with the same bore as the injection line.
    std::vector<Feasibility> feasibility;

    bool ok() const { return status == CaseStatus::Ok; }
};

// Single case of a sweep; never throws for hydraulic failures.
ScenarioResult evaluate_case(const SweepDefinition& def, double injection_id_in,
                             const FlowCase& flow);

// One result per (injection id x q1) in that nesting order.
std::vector<ScenarioResult> run_sweep(const SweepDefinition& def);

struct ComparisonRow {
    ScenarioResult result;
    // CO2 when the deck pump works at the single-pass pressure boost.
    double co2_equal_dp_t = 0.0;
    // CO2 at this case's own solved pressure boost.
    double co2_actual_dp_t = 0.0;
};

struct ComparisonGroup {
    double injection_id_in = 0.0;
    ComparisonRow single_pass;
    std::vector<ComparisonRow> recirculation;
    BreakevenReport breakeven;
};

struct ComparisonReport {
    SweepDefinition definition;
    std::vector<ComparisonGroup> groups;
};

ComparisonReport compare_methods(const SweepDefinition& def, const FlushSystem& system,
                                 const EmissionFactor& factor);

struct CurvePoint {
    double time_s = 0.0;
    double oil_fraction = 0.0;
};

struct MeasuredCurve {
    std::vector<CurvePoint> points;
    double injection_rate_m3h = 0.0;
    std::optional<double> system_volume_m3;
    std::string source;

    void validate() const;
};

// CSV with header time_s,oil_fraction.
MeasuredCurve load_measured_curve(const std::string& path, double injection_rate_m3h);

struct FitReport {
    std::vector<double> model_fraction;
    std::vector<double> residual; // measured - model
    double rmse = 0.0;
    double max_abs_error = 0.0;
    // Least-squares volume from the log-linear regression through the origin.
    std::optional<double> fitted_volume_m3;
    double terminal_model_fraction = 0.0;
};

FitReport fit_model_to_curve(const MeasuredCurve& curve, const FlushSystem& system);

} // namespace subseaflush
