#include "subseaflush/cli.h"

#include "subseaflush/config.h"
#include "subseaflush/errors.h"
#include "subseaflush/report_io.h"

#include <CLI11.hpp>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace subseaflush {

namespace {

namespace fs = std::filesystem;
using report::json;

struct GlobalOptions {
    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<std::string> format;
    std::vector<std::string> overrides;
};

RunConfig resolve_config(const GlobalOptions& g)
{
    json doc = g.config_path.empty() ? to_json(RunConfig{}) : read_config_document(g.config_path);
    for (const auto& assignment : g.overrides) {
        apply_override(doc, assignment);
    }
    RunConfig config = config_from_json(doc);
    if (g.out_dir) {
        config.output.dir = *g.out_dir;
    }
    if (g.format) {
        config.output.format = *g.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    }
    config.validate();
    return config;
}

class Writer {
public:
    Writer(const RunConfig& config, std::ostream& out)
        : dir_(config.output.dir), json_(config.output.format == OutputFormat::Json), out_(out)
    {
    }

    bool is_json() const { return json_; }
    const char* ext() const { return json_ ? "json" : "csv"; }

    void write(const std::string& name, const std::string& content)
    {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) {
            throw IoError(fmt::format("{}: cannot create directory: {}", dir_.string(), ec.message()));
        }
        const fs::path path = dir_ / name;
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw IoError(fmt::format("{}: cannot open for writing", path.string()));
        }
        f << content;
        f.close();
        if (!f) {
            throw IoError(fmt::format("{}: write failed", path.string()));
        }
        out_ << "wrote " << path.string() << '\n';
    }

    void write_machine(const std::string& stem, const std::string& csv, const report::json& doc)
    {
        write(fmt::format("{}.{}", stem, ext()), json_ ? doc.dump(2) + "\n" : csv);
    }

private:
    fs::path dir_;
    bool json_;
    std::ostream& out_;
};

int cmd_flush(const RunConfig& config, std::ostream& out)
{
    const auto series = report::flush_series(config.system, config.flush.rate_m3h,
                                             config.flush.duration_s, config.flush.step_s);
    out << report::flush_summary_text(series, config.system);
    Writer w(config, out);
    if (w.is_json()) {
        w.write("flush.json", report::flush_series_json(series, config.system).dump(2) + "\n");
    } else {
        w.write("flush.csv", report::flush_series_csv(series, config.system));
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out)
{
    const auto def = sweep_definition(config);
    const auto results = run_sweep(def);
    Writer w(config, out);
    for (double id : def.injection_ids_in) {
        const auto stem = fmt::format("curve_id{}in", id);
        if (w.is_json()) {
            w.write(stem + ".json", report::curve_json(results, id, def).dump(2) + "\n");
        } else {
            w.write(stem + ".csv", report::curve_csv(results, id, def));
        }
    }
    if (w.is_json()) {
        w.write("sweep_results.json", report::sweep_results_json(results, def).dump(2) + "\n");
    } else {
        w.write("sweep_results.csv", report::sweep_results_csv(results, def));
    }
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (!r.ok()) {
            ++failed;
            out << fmt::format("case ID {} in, Q1 {} m3/h: {} ({})\n", r.injection_id_in,
                               r.flow.q1_injection_m3h, to_string(r.status), r.failure);
        }
    }
    out << fmt::format("{} cases, {} failed\n", results.size(), failed);
    return failed == 0 ? kExitOk : kExitConvergence;
}

struct ReelOptions {
    std::vector<std::string> products;
    std::vector<std::string> inline_products;
    std::optional<double> water_depth_m;
    std::optional<double> margin_m;
};

int cmd_reel(const RunConfig& config, const ReelOptions& opt, std::ostream& out)
{
    auto catalog = load_catalog(config.reel);
    const auto table = load_k_table(config.reel);
    std::vector<std::string> names = opt.products.empty() ? config.reel.products : opt.products;
    for (const auto& row : opt.inline_products) {
        const auto parsed = ConduitCatalog::parse_csv(
            "name,id_in,od_in,kind,max_wp_bar,k_factor,core_in,width_in,stack_in\n" + row,
            "--product-spec");
        for (const auto& p : parsed.products()) {
            catalog.add(p);
            names.push_back(p.name);
        }
    }
    if (names.empty()) {
        for (const auto& p : catalog.products()) {
            names.push_back(p.name);
        }
    }
    const double wd = opt.water_depth_m.value_or(config.geometry.water_depth_m);
    const double margin = opt.margin_m.value_or(config.reel.margin_m);
    if (!(wd >= 0.0) || !(margin >= 0.0)) {
        throw ValidationError("reel: water depth and margin must be >= 0");
    }
    const double required = wd + margin;

    std::vector<report::ReelRow> rows;
    for (const auto& name : names) {
        const auto& p = catalog.find(name);
        const auto spec = reel_spec_for(p, config.reel.k_source, table);
        rows.push_back({p, size_reel(p, spec, config.reel.material_density_kg_m3, required)});
    }
    const double density = config.reel.material_density_kg_m3;
    out << report::reel_table_text(rows, density);
    out << fmt::format("required length {} m (water depth {} m + margin {} m)\n", required, wd,
                       margin);
    Writer w(config, out);
    w.write_machine("reel", report::reel_table_csv(rows, density),
                    report::reel_table_json(rows, density));
    return kExitOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out)
{
    const auto def = sweep_definition(config);
    const auto rep = compare_methods(def, config.system, config.emission.factor);
    const auto& note = config.emission.note;
    const auto text = report::comparison_text(rep, note);
    out << text;
    Writer w(config, out);
    w.write("comparison.txt", text);
    w.write_machine("comparison", report::comparison_csv(rep, note),
                    report::comparison_json(rep, note));
    return kExitOk;
}

struct FitOptions {
    std::optional<std::string> curve_path;
    std::optional<double> rate_m3h;
};

int cmd_fit(const RunConfig& config, const FitOptions& opt, std::ostream& out)
{
    const auto path = opt.curve_path.value_or(config.fit.curve_path);
    if (path.empty()) {
        throw ValidationError("fit: no curve file (use --curve or fit.curve_path)");
    }
    const double rate = opt.rate_m3h.value_or(config.fit.rate_m3h);
    const auto curve = load_measured_curve(path, rate);
    const auto fit = fit_model_to_curve(curve, config.system);
    out << report::fit_report_text(curve, config.system, fit);
    Writer w(config, out);
    w.write_machine("fit", report::fit_report_csv(curve, config.system, fit),
                    report::fit_report_json(curve, config.system, fit));
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Subsea MEG flushing planner"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--config", g.config_path, "JSON run configuration");
    app.add_option("--out", g.out_dir, "Output directory");
    app.add_option("--format", g.format, "Machine-readable output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--set", g.overrides, "Override a config value, dotted.key=value");

    std::optional<double> flush_rate, flush_duration, flush_step;
    auto* flush = app.add_subcommand("flush", "Oil fraction decay and time to target");
    flush->add_option("--rate", flush_rate, "Injection rate [m3/h]");
    flush->add_option("--duration", flush_duration, "Series duration [s]");
    flush->add_option("--step", flush_step, "Series step [s]");

    auto* sweep = app.add_subcommand("sweep", "Deck pressure and power over the Q1 split");

    ReelOptions reel_opt;
    auto* reel = app.add_subcommand("reel", "Reel capacity, spool volume and mass");
    reel->add_option("--product", reel_opt.products, "Catalog product name (repeatable)");
    reel->add_option("--product-spec", reel_opt.inline_products,
                     "Inline product: name,id_in,od_in,kind,max_wp_bar,k_factor,core_in,"
                     "width_in,stack_in");
    reel->add_option("--water-depth", reel_opt.water_depth_m, "Water depth [m]");
    reel->add_option("--margin", reel_opt.margin_m, "Length margin over water depth [m]");

    auto* compare = app.add_subcommand("compare", "Single-pass vs recirculation report");

    FitOptions fit_opt;
    auto* fit = app.add_subcommand("fit", "Compare the mixing model with a measured curve");
    fit->add_option("--curve", fit_opt.curve_path, "CSV with time_s,oil_fraction");
    fit->add_option("--rate", fit_opt.rate_m3h, "Injection rate of the measurement [m3/h]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        RunConfig config = resolve_config(g);
        if (*flush) {
            if (flush_rate) {
                config.flush.rate_m3h = *flush_rate;
            }
            if (flush_duration) {
                config.flush.duration_s = *flush_duration;
            }
            if (flush_step) {
                config.flush.step_s = *flush_step;
            }
            config.validate();
            return cmd_flush(config, out);
        }
        if (*sweep) {
            return cmd_sweep(config, out);
        }
        if (*reel) {
            return cmd_reel(config, reel_opt, out);
        }
        if (*compare) {
            return cmd_compare(config, out);
        }
        if (*fit) {
            return cmd_fit(config, fit_opt, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConvergence;
    }
    return kExitValidation;
}

} // namespace subseaflush
