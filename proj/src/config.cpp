#include "subseaflush/config.h"

#include "subseaflush/errors.h"

#include <fmt/format.h>
#include <fstream>
#include <set>
#include <sstream>

namespace subseaflush {

using json = nlohmann::ordered_json;

namespace {

// Reads one object block, remembering which keys were consumed so leftovers
// can be reported as unknown.
class BlockReader {
public:
    BlockReader(const json& doc, std::string path) : path_(std::move(path))
    {
        if (doc.is_null()) {
            return;
        }
        if (!doc.is_object()) {
            throw ValidationError(fmt::format("{}: expected an object", display()));
        }
        doc_ = &doc;
    }

    void number(const char* key, double& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_number()) {
                throw ValidationError(fmt::format("{}: expected a number", child(key)));
            }
            out = v->get<double>();
        }
    }

    void integer(const char* key, int& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_number_integer()) {
                throw ValidationError(fmt::format("{}: expected an integer", child(key)));
            }
            out = v->get<int>();
        }
    }

    void boolean(const char* key, bool& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_boolean()) {
                throw ValidationError(fmt::format("{}: expected true or false", child(key)));
            }
            out = v->get<bool>();
        }
    }

    void string(const char* key, std::string& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_string()) {
                throw ValidationError(fmt::format("{}: expected a string", child(key)));
            }
            out = v->get<std::string>();
        }
    }

    void numbers(const char* key, std::vector<double>& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_array()) {
                throw ValidationError(fmt::format("{}: expected an array of numbers", child(key)));
            }
            out.clear();
            for (const auto& e : *v) {
                if (!e.is_number()) {
                    throw ValidationError(
                        fmt::format("{}: expected an array of numbers", child(key)));
                }
                out.push_back(e.get<double>());
            }
        }
    }

    void strings(const char* key, std::vector<std::string>& out)
    {
        if (const json* v = take(key)) {
            if (!v->is_array()) {
                throw ValidationError(fmt::format("{}: expected an array of strings", child(key)));
            }
            out.clear();
            for (const auto& e : *v) {
                if (!e.is_string()) {
                    throw ValidationError(
                        fmt::format("{}: expected an array of strings", child(key)));
                }
                out.push_back(e.get<std::string>());
            }
        }
    }

    const json& block(const char* key)
    {
        static const json null_doc;
        const json* v = take(key);
        return v ? *v : null_doc;
    }

    std::string child(const char* key) const
    {
        return path_.empty() ? std::string(key) : path_ + "." + key;
    }

    // Rejects keys that no accessor asked for.
    void finish() const
    {
        if (!doc_) {
            return;
        }
        for (const auto& [key, value] : doc_->items()) {
            if (!seen_.count(key)) {
                throw ValidationError(fmt::format("{}: unknown key", child(key.c_str())));
            }
        }
    }

private:
    const json* take(const char* key)
    {
        seen_.insert(key);
        if (!doc_) {
            return nullptr;
        }
        auto it = doc_->find(key);
        return it == doc_->end() ? nullptr : &*it;
    }

    std::string display() const { return path_.empty() ? "<config>" : path_; }

    const json* doc_ = nullptr;
    std::string path_;
    std::set<std::string> seen_;
};

const char* k_source_name(KFactorSource s)
{
    return s == KFactorSource::Table ? "table" : "geometric";
}

const char* format_name(OutputFormat f)
{
    return f == OutputFormat::Json ? "json" : "csv";
}

} // namespace

void RunConfig::validate() const
{
    fluid.validate();
    make_reference_loop(geometry).validate();
    efficiencies.validate();
    system.validate();
    emission.factor.validate();
    if (!(solver.closure_tolerance_pa > 0.0) || solver.max_iterations < 1) {
        throw ValidationError(
            "solver: closure_tolerance_pa must be > 0 and max_iterations must be >= 1");
    }
    if (!(flush.rate_m3h > 0.0)) {
        throw ValidationError("flush.rate_m3h must be > 0");
    }
    if (!(flush.duration_s >= 0.0)) {
        throw ValidationError("flush.duration_s must be >= 0");
    }
    if (!(flush.step_s > 0.0)) {
        throw ValidationError("flush.step_s must be > 0");
    }
    if (!(reel.margin_m >= 0.0)) {
        throw ValidationError("reel.margin_m must be >= 0");
    }
    if (!(reel.material_density_kg_m3 > 0.0)) {
        throw ValidationError("reel.material_density_kg_m3 must be > 0");
    }
    if (!(fit.rate_m3h > 0.0)) {
        throw ValidationError("fit.rate_m3h must be > 0");
    }
    sweep_definition(*this).validate();
}

json to_json(const RunConfig& c)
{
    json doc;
    doc["fluid"] = {{"name", c.fluid.name},
                    {"density_kg_m3", c.fluid.density_kg_m3},
                    {"dynamic_viscosity_pa_s", c.fluid.dynamic_viscosity_pa_s}};
    const auto& g = c.geometry;
    doc["geometry"] = {{"water_depth_m", g.water_depth_m},
                       {"injection_id_in", g.injection_id_in},
                       {"recirc_id_in", g.recirc_id_in},
                       {"production_id_in", g.production_id_in},
                       {"return_id_in", g.return_id_in},
                       {"recirc_discharge_length_m", g.recirc_discharge_length_m},
                       {"recirc_suction_length_m", g.recirc_suction_length_m},
                       {"production_upstream_length_m", g.production_upstream_length_m},
                       {"production_downstream_length_m", g.production_downstream_length_m},
                       {"roughness_m", g.roughness_m},
                       {"tee_loss_coefficient", g.tee_loss_coefficient},
                       {"include_transitions", g.include_transitions}};
    doc["efficiencies"] = {{"deck_pump", c.efficiencies.deck_pump},
                           {"subsea_pump", c.efficiencies.subsea_pump},
                           {"subsea_motor", c.efficiencies.subsea_motor}};
    doc["solver"] = {{"closure_tolerance_pa", c.solver.closure_tolerance_pa},
                     {"max_iterations", c.solver.max_iterations}};
    doc["system"] = {{"total_volume_m3", c.system.total_volume_m3},
                     {"initial_oil_fraction", c.system.initial_oil_fraction},
                     {"target_oil_fraction", c.system.target_oil_fraction}};
    doc["sweep"] = {{"total_rate_m3h", c.sweep.total_rate_m3h},
                    {"q1_values_m3h", c.sweep.q1_values_m3h},
                    {"injection_ids_in", c.sweep.injection_ids_in},
                    {"single_pass_duration_s", c.sweep.single_pass_duration_s},
                    {"parallel", c.sweep.parallel}};
    doc["emission"] = {{"co2_t_per_mwh", c.emission.factor.co2_t_per_mwh},
                       {"note", c.emission.note}};
    doc["flush"] = {{"rate_m3h", c.flush.rate_m3h},
                    {"duration_s", c.flush.duration_s},
                    {"step_s", c.flush.step_s}};
    doc["reel"] = {{"margin_m", c.reel.margin_m},
                   {"material_density_kg_m3", c.reel.material_density_kg_m3},
                   {"k_source", k_source_name(c.reel.k_source)},
                   {"catalog_path", c.reel.catalog_path},
                   {"k_table_path", c.reel.k_table_path},
                   {"products", c.reel.products}};
    doc["fit"] = {{"curve_path", c.fit.curve_path}, {"rate_m3h", c.fit.rate_m3h}};
    doc["output"] = {{"dir", c.output.dir}, {"format", format_name(c.output.format)}};
    return doc;
}

RunConfig config_from_json(const json& doc)
{
    RunConfig c;
    BlockReader root(doc, "");

    {
        BlockReader r(root.block("fluid"), "fluid");
        r.string("name", c.fluid.name);
        r.number("density_kg_m3", c.fluid.density_kg_m3);
        r.number("dynamic_viscosity_pa_s", c.fluid.dynamic_viscosity_pa_s);
        r.finish();
    }
    {
        auto& g = c.geometry;
        BlockReader r(root.block("geometry"), "geometry");
        r.number("water_depth_m", g.water_depth_m);
        r.number("injection_id_in", g.injection_id_in);
        r.number("recirc_id_in", g.recirc_id_in);
        r.number("production_id_in", g.production_id_in);
        r.number("return_id_in", g.return_id_in);
        r.number("recirc_discharge_length_m", g.recirc_discharge_length_m);
        r.number("recirc_suction_length_m", g.recirc_suction_length_m);
        r.number("production_upstream_length_m", g.production_upstream_length_m);
        r.number("production_downstream_length_m", g.production_downstream_length_m);
        r.number("roughness_m", g.roughness_m);
        r.number("tee_loss_coefficient", g.tee_loss_coefficient);
        r.boolean("include_transitions", g.include_transitions);
        r.finish();
    }
    {
        BlockReader r(root.block("efficiencies"), "efficiencies");
        r.number("deck_pump", c.efficiencies.deck_pump);
        r.number("subsea_pump", c.efficiencies.subsea_pump);
        r.number("subsea_motor", c.efficiencies.subsea_motor);
        r.finish();
    }
    {
        BlockReader r(root.block("solver"), "solver");
        r.number("closure_tolerance_pa", c.solver.closure_tolerance_pa);
        r.integer("max_iterations", c.solver.max_iterations);
        r.finish();
    }
    {
        BlockReader r(root.block("system"), "system");
        r.number("total_volume_m3", c.system.total_volume_m3);
        r.number("initial_oil_fraction", c.system.initial_oil_fraction);
        r.number("target_oil_fraction", c.system.target_oil_fraction);
        r.finish();
    }
    {
        BlockReader r(root.block("sweep"), "sweep");
        r.number("total_rate_m3h", c.sweep.total_rate_m3h);
        r.numbers("q1_values_m3h", c.sweep.q1_values_m3h);
        r.numbers("injection_ids_in", c.sweep.injection_ids_in);
        r.number("single_pass_duration_s", c.sweep.single_pass_duration_s);
        r.boolean("parallel", c.sweep.parallel);
        r.finish();
    }
    {
        BlockReader r(root.block("emission"), "emission");
        r.number("co2_t_per_mwh", c.emission.factor.co2_t_per_mwh);
        r.string("note", c.emission.note);
        r.finish();
    }
    {
        BlockReader r(root.block("flush"), "flush");
        r.number("rate_m3h", c.flush.rate_m3h);
        r.number("duration_s", c.flush.duration_s);
        r.number("step_s", c.flush.step_s);
        r.finish();
    }
    {
        BlockReader r(root.block("reel"), "reel");
        r.number("margin_m", c.reel.margin_m);
        r.number("material_density_kg_m3", c.reel.material_density_kg_m3);
        std::string source = k_source_name(c.reel.k_source);
        r.string("k_source", source);
        if (source == "geometric") {
            c.reel.k_source = KFactorSource::Geometric;
        } else if (source == "table") {
            c.reel.k_source = KFactorSource::Table;
        } else {
            throw ValidationError("reel.k_source: expected \"geometric\" or \"table\"");
        }
        r.string("catalog_path", c.reel.catalog_path);
        r.string("k_table_path", c.reel.k_table_path);
        r.strings("products", c.reel.products);
        r.finish();
    }
    {
        BlockReader r(root.block("fit"), "fit");
        r.string("curve_path", c.fit.curve_path);
        r.number("rate_m3h", c.fit.rate_m3h);
        r.finish();
    }
    {
        BlockReader r(root.block("output"), "output");
        r.string("dir", c.output.dir);
        std::string format = format_name(c.output.format);
        r.string("format", format);
        if (format == "csv") {
            c.output.format = OutputFormat::Csv;
        } else if (format == "json") {
            c.output.format = OutputFormat::Json;
        } else {
            throw ValidationError("output.format: expected \"csv\" or \"json\"");
        }
        r.finish();
    }
    root.finish();
    return c;
}

json read_config_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot open config '{}'", path));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw ValidationError(fmt::format("{}: malformed config: {}", path, e.what()));
    }
}

void apply_override(json& doc, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ValidationError(
            fmt::format("--set '{}': expected dotted.key=value", assignment));
    }
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);

    json* node = &doc;
    std::string walked;
    std::istringstream parts(key);
    std::string part;
    while (std::getline(parts, part, '.')) {
        walked = walked.empty() ? part : walked + "." + part;
        if (!node->is_object() || !node->contains(part)) {
            throw ValidationError(fmt::format("--set {}: unknown key", walked));
        }
        node = &(*node)[part];
    }
    if (node->is_object()) {
        throw ValidationError(fmt::format("--set {}: key names a block, not a value", key));
    }

    json value;
    try {
        value = json::parse(text);
    } catch (const json::parse_error&) {
        value = text;
    }
    if (node->is_string() && !value.is_string()) {
        value = text;
    }
    *node = value;
}

ConduitCatalog load_catalog(const ReelBlock& reel)
{
    return reel.catalog_path.empty() ? ConduitCatalog::builtin()
                                     : ConduitCatalog::load_csv(reel.catalog_path);
}

KFactorTable load_k_table(const ReelBlock& reel)
{
    return reel.k_table_path.empty() ? KFactorTable::builtin()
                                     : KFactorTable::load_csv(reel.k_table_path);
}

SweepDefinition sweep_definition(const RunConfig& c)
{
    SweepDefinition d;
    d.total_target_rate_m3h = c.sweep.total_rate_m3h;
    d.q1_values_m3h = c.sweep.q1_values_m3h;
    d.injection_ids_in = c.sweep.injection_ids_in;
    d.loop = c.geometry;
    d.fluid = c.fluid;
    d.efficiencies = c.efficiencies;
    d.solver = c.solver;
    d.system = c.system;
    d.emission = c.emission.factor;
    d.single_pass_duration_s = c.sweep.single_pass_duration_s;
    d.catalog = load_catalog(c.reel);
    d.parallel = c.sweep.parallel;
    return d;
}

} // namespace subseaflush
