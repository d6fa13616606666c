#pragma once

// Run configuration: one JSON document with a block per module. Every block
// is optional; omitted keys keep their defaults, unknown keys are rejected.

#include "subseaflush/core_model.h"
#include "subseaflush/emissions.h"
#include "subseaflush/equipment.h"
#include "subseaflush/hydraulics.h"
#include "subseaflush/scenario.h"

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace subseaflush {

struct FlushBlock {
    double rate_m3h = 5.0;
    double duration_s = 600.0;
    double step_s = 10.0;
};

struct SweepBlock {
    double total_rate_m3h = 25.0;
    std::vector<double> q1_values_m3h = default_q1_values();
    std::vector<double> injection_ids_in = {1.5, 2.0, 3.0, 4.0};
    double single_pass_duration_s = 7200.0;
    bool parallel = true;
};

struct EmissionBlock {
    EmissionFactor factor;
    std::string note;
};

struct ReelBlock {
    double margin_m = 400.0;
    double material_density_kg_m3 = kSteelDensity;
    KFactorSource k_source = KFactorSource::Geometric;
    std::string catalog_path;
    std::string k_table_path;
    std::vector<std::string> products;
};

struct FitBlock {
    std::string curve_path;
    double rate_m3h = 5.0;
};

enum class OutputFormat { Csv, Json };

struct OutputBlock {
    std::string dir = "out";
    OutputFormat format = OutputFormat::Csv;
};

struct RunConfig {
    FluidProperties fluid;
    ReferenceLoopParams geometry;
    MachineEfficiencies efficiencies;
    LoopSolverOptions solver;
    FlushSystem system;
    SweepBlock sweep;
    EmissionBlock emission;
    FlushBlock flush;
    ReelBlock reel;
    FitBlock fit;
    OutputBlock output;

    void validate() const;
};

nlohmann::ordered_json to_json(const RunConfig& config);

// Throws ValidationError with the dotted path of the offending key.
RunConfig config_from_json(const nlohmann::ordered_json& doc);

// Reads and parses a config file. Throws IoError or ValidationError.
nlohmann::ordered_json read_config_document(const std::string& path);

// Applies "dotted.key=value" to a document. The value is parsed as JSON when
// possible (numbers, booleans, arrays) and taken as a string otherwise.
void apply_override(nlohmann::ordered_json& doc, const std::string& assignment);

ConduitCatalog load_catalog(const ReelBlock& reel);
KFactorTable load_k_table(const ReelBlock& reel);

SweepDefinition sweep_definition(const RunConfig& config);

} // namespace subseaflush
