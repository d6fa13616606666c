#pragma once

// Tabular and structured emitters. Machine outputs are SI; human-readable
// text uses bar, kW and tonnes. Every report carries the resolved
// assumptions: as '#' comment lines in CSV, as an "assumptions" object in
// JSON, and as a header block in text.

#include "subseaflush/equipment.h"
#include "subseaflush/hydraulics.h"
#include "subseaflush/scenario.h"

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace subseaflush::report {

using json = nlohmann::ordered_json;

json assumptions_json(const SweepDefinition& def, const std::string& note = {});
std::string assumptions_csv_comment(const SweepDefinition& def, const std::string& note = {});
std::string assumptions_text(const SweepDefinition& def, const std::string& note = {});

// node,pressure_pa,pressure_bar
std::string node_map_csv(const NodePressureMap& nodes);
json node_map_json(const NodePressureMap& nodes);

// Full result table, one row per case.
std::string sweep_results_csv(const std::vector<ScenarioResult>& results,
                              const SweepDefinition& def);
json sweep_results_json(const std::vector<ScenarioResult>& results, const SweepDefinition& def);

// Plot-ready Q1 vs deck pressure and power for one injection bore.
std::string curve_csv(const std::vector<ScenarioResult>& results, double injection_id_in,
                      const SweepDefinition& def);
json curve_json(const std::vector<ScenarioResult>& results, double injection_id_in,
                const SweepDefinition& def);

struct FlushSeries {
    double rate_m3h = 0.0;
    std::vector<double> time_s;
    std::vector<double> oil_fraction;
    std::vector<double> tau;
    std::optional<double> time_to_target_s;
    std::optional<double> required_volume_m3;
};

FlushSeries flush_series(const FlushSystem& system, double rate_m3h, double duration_s,
                         double step_s);
std::string flush_series_csv(const FlushSeries& s, const FlushSystem& system);
json flush_series_json(const FlushSeries& s, const FlushSystem& system);
std::string flush_summary_text(const FlushSeries& s, const FlushSystem& system);

struct ReelRow {
    ConduitProduct product;
    ReelResult result;
};

std::string reel_table_text(const std::vector<ReelRow>& rows, double material_density_kg_m3);
std::string reel_table_csv(const std::vector<ReelRow>& rows, double material_density_kg_m3);
json reel_table_json(const std::vector<ReelRow>& rows, double material_density_kg_m3);

std::string comparison_text(const ComparisonReport& report, const std::string& note = {});
std::string comparison_csv(const ComparisonReport& report, const std::string& note = {});
json comparison_json(const ComparisonReport& report, const std::string& note = {});

std::string fit_report_text(const MeasuredCurve& curve, const FlushSystem& system,
                            const FitReport& fit);
std::string fit_report_csv(const MeasuredCurve& curve, const FlushSystem& system,
                           const FitReport& fit);
json fit_report_json(const MeasuredCurve& curve, const FlushSystem& system, const FitReport& fit);

} // namespace subseaflush::report
