#include "subseaflush/report_io.h"

#include "subseaflush/errors.h"
#include "subseaflush/units.h"

#include <cmath>
#include <fmt/format.h>

namespace subseaflush::report {

namespace {

std::string num(double v)
{
    return std::isfinite(v) ? fmt::format("{}", v) : std::string{};
}

std::string num(const std::optional<double>& v)
{
    return v ? num(*v) : std::string{};
}

json jnum(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json jnum(const std::optional<double>& v)
{
    return v ? jnum(*v) : json(nullptr);
}

std::string feasibility_cell(const std::vector<Feasibility>& list)
{
    std::string out;
    for (const auto& f : list) {
        if (!out.empty()) {
            out += ';';
        }
        out += fmt::format("{}={}({})", f.product, f.pass ? "pass" : "fail", num(f.margin_pa));
    }
    return out;
}

json feasibility_json(const std::vector<Feasibility>& list)
{
    json arr = json::array();
    for (const auto& f : list) {
        arr.push_back({{"product", f.product}, {"pass", f.pass}, {"margin_pa", jnum(f.margin_pa)}});
    }
    return arr;
}

json result_json(const ScenarioResult& r)
{
    return {{"injection_id_in", r.injection_id_in},
            {"q1_m3h", r.flow.q1_injection_m3h},
            {"q2_m3h", r.flow.q2_recirculation_m3h},
            {"q3_m3h", r.flow.q3_total_m3h()},
            {"status", to_string(r.status)},
            {"failure", r.failure},
            {"deck_dp_pa", jnum(r.deck_dp_pa)},
            {"deck_power_w", jnum(r.deck_power_w)},
            {"subsea_dp_pa", jnum(r.subsea_dp_pa)},
            {"subsea_power_w", jnum(r.subsea_power_w)},
            {"flushing_time_to_target_s", jnum(r.flushing_time_to_target_s)},
            {"flushing_duration_s", jnum(r.flushing_duration_s)},
            {"injected_volume_m3", jnum(r.injected_volume_m3)},
            {"co2_t", jnum(r.co2_t)},
            {"closure_residual_pa", r.ok() ? jnum(r.nodes.closure_residual_pa) : json(nullptr)},
            {"iterations", r.nodes.iterations},
            {"feasibility", feasibility_json(r.feasibility)}};
}

constexpr const char* kResultHeader =
    "injection_id_in,q1_m3h,q2_m3h,q3_m3h,status,deck_dp_pa,deck_power_w,subsea_dp_pa,"
    "subsea_power_w,flushing_time_to_target_s,flushing_duration_s,injected_volume_m3,co2_t,"
    "closure_residual_pa,iterations,feasibility\n";

std::string result_csv_row(const ScenarioResult& r)
{
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", num(r.injection_id_in),
                       num(r.flow.q1_injection_m3h), num(r.flow.q2_recirculation_m3h),
                       num(r.flow.q3_total_m3h()), to_string(r.status), num(r.deck_dp_pa),
                       num(r.deck_power_w), num(r.subsea_dp_pa), num(r.subsea_power_w),
                       num(r.flushing_time_to_target_s), num(r.flushing_duration_s),
                       num(r.injected_volume_m3), num(r.co2_t),
                       r.ok() ? num(r.nodes.closure_residual_pa) : std::string{},
                       r.nodes.iterations, feasibility_cell(r.feasibility));
}

std::string bar_text(double pa)
{
    return std::isfinite(pa) ? fmt::format("{:.1f}", units::pa_to_bar(pa)) : std::string("-");
}

std::string kw_text(double w)
{
    return std::isfinite(w) ? fmt::format("{:.1f}", w / 1000.0) : std::string("-");
}

} // namespace

json assumptions_json(const SweepDefinition& def, const std::string& note)
{
    const auto& g = def.loop;
    return {{"fluid",
             {{"name", def.fluid.name},
              {"density_kg_m3", def.fluid.density_kg_m3},
              {"dynamic_viscosity_pa_s", def.fluid.dynamic_viscosity_pa_s}}},
            {"geometry",
             {{"water_depth_m", g.water_depth_m},
              {"recirc_id_in", g.recirc_id_in},
              {"production_id_in", g.production_id_in},
              {"return_id_in", g.return_id_in},
              {"recirc_discharge_length_m", g.recirc_discharge_length_m},
              {"recirc_suction_length_m", g.recirc_suction_length_m},
              {"production_upstream_length_m", g.production_upstream_length_m},
              {"production_downstream_length_m", g.production_downstream_length_m},
              {"roughness_m", g.roughness_m},
              {"tee_loss_coefficient", g.tee_loss_coefficient},
              {"include_transitions", g.include_transitions}}},
            {"efficiencies",
             {{"deck_pump", def.efficiencies.deck_pump},
              {"subsea_pump", def.efficiencies.subsea_pump},
              {"subsea_motor", def.efficiencies.subsea_motor}}},
            {"system",
             {{"total_volume_m3", def.system.total_volume_m3},
              {"initial_oil_fraction", def.system.initial_oil_fraction},
              {"target_oil_fraction", def.system.target_oil_fraction}}},
            {"emission", {{"co2_t_per_mwh", def.emission.co2_t_per_mwh}, {"note", note}}},
            {"single_pass_duration_s", def.single_pass_duration_s},
            {"gravity_m_s2", units::kGravity},
            {"surface_pressure_pa", units::kAtmosphere}};
}

std::string assumptions_csv_comment(const SweepDefinition& def, const std::string& note)
{
    const auto& g = def.loop;
    std::string out;
    out += fmt::format("# fluid: name={} density_kg_m3={} dynamic_viscosity_pa_s={}\n",
                       def.fluid.name, num(def.fluid.density_kg_m3),
                       num(def.fluid.dynamic_viscosity_pa_s));
    out += fmt::format(
        "# geometry: water_depth_m={} recirc_id_in={} production_id_in={} return_id_in={} "
        "roughness_m={} tee_loss_coefficient={} include_transitions={}\n",
        num(g.water_depth_m), num(g.recirc_id_in), num(g.production_id_in), num(g.return_id_in),
        num(g.roughness_m), num(g.tee_loss_coefficient), g.include_transitions);
    out += fmt::format("# efficiencies: deck_pump={} subsea_pump={} subsea_motor={}\n",
                       num(def.efficiencies.deck_pump), num(def.efficiencies.subsea_pump),
                       num(def.efficiencies.subsea_motor));
    out += fmt::format(
        "# system: total_volume_m3={} initial_oil_fraction={} target_oil_fraction={}\n",
        num(def.system.total_volume_m3), num(def.system.initial_oil_fraction),
        num(def.system.target_oil_fraction));
    out += fmt::format("# emission: co2_t_per_mwh={} single_pass_duration_s={}{}\n",
                       num(def.emission.co2_t_per_mwh), num(def.single_pass_duration_s),
                       note.empty() ? std::string{} : " note=" + note);
    return out;
}

std::string assumptions_text(const SweepDefinition& def, const std::string& note)
{
    const auto& g = def.loop;
    std::string out = "Assumptions\n";
    out += fmt::format("  fluid            {} rho={} kg/m3 mu={} Pa.s\n", def.fluid.name,
                       num(def.fluid.density_kg_m3), num(def.fluid.dynamic_viscosity_pa_s));
    out += fmt::format("  geometry         WD={} m, recirc {} in, production {} in, return {} in\n",
                       num(g.water_depth_m), num(g.recirc_id_in), num(g.production_id_in),
                       num(g.return_id_in));
    out += fmt::format("  roughness        {} m, tee K={}, transitions {}\n", num(g.roughness_m),
                       num(g.tee_loss_coefficient), g.include_transitions ? "on" : "off");
    out += fmt::format("  efficiencies     deck {}, subsea pump {}, subsea motor {}\n",
                       num(def.efficiencies.deck_pump), num(def.efficiencies.subsea_pump),
                       num(def.efficiencies.subsea_motor));
    out += fmt::format("  flushed system   V={} m3, initial fraction {}, target {}\n",
                       num(def.system.total_volume_m3), num(def.system.initial_oil_fraction),
                       num(def.system.target_oil_fraction));
    out += fmt::format("  emission factor  {} tCO2/MWh; single-pass duration {} s\n",
                       num(def.emission.co2_t_per_mwh), num(def.single_pass_duration_s));
    if (!note.empty()) {
        out += fmt::format("  note             {}\n", note);
    }
    return out;
}

std::string node_map_csv(const NodePressureMap& nodes)
{
    std::string out = "node,pressure_pa,pressure_bar\n";
    for (char n : kLoopNodes) {
        out += fmt::format("{},{},{}\n", n, num(nodes.at(n)), num(units::pa_to_bar(nodes.at(n))));
    }
    return out;
}

json node_map_json(const NodePressureMap& nodes)
{
    json arr = json::array();
    for (char n : kLoopNodes) {
        arr.push_back({{"node", std::string(1, n)},
                       {"pressure_pa", nodes.at(n)},
                       {"pressure_bar", units::pa_to_bar(nodes.at(n))}});
    }
    return {{"nodes", arr},
            {"deck_pump_dp_pa", nodes.deck_pump_dp_pa},
            {"subsea_pump_dp_pa", nodes.subsea_pump_dp_pa},
            {"motor_dp_pa", nodes.motor_dp_pa},
            {"closure_residual_pa", nodes.closure_residual_pa},
            {"converged", nodes.converged},
            {"iterations", nodes.iterations}};
}

std::string sweep_results_csv(const std::vector<ScenarioResult>& results,
                              const SweepDefinition& def)
{
    std::string out = assumptions_csv_comment(def);
    out += kResultHeader;
    for (const auto& r : results) {
        out += result_csv_row(r);
    }
    return out;
}

json sweep_results_json(const std::vector<ScenarioResult>& results, const SweepDefinition& def)
{
    json rows = json::array();
    for (const auto& r : results) {
        rows.push_back(result_json(r));
    }
    return {{"assumptions", assumptions_json(def)}, {"results", rows}};
}

std::string curve_csv(const std::vector<ScenarioResult>& results, double injection_id_in,
                      const SweepDefinition& def)
{
    std::string out = assumptions_csv_comment(def);
    out += fmt::format("# injection_id_in={}\n", num(injection_id_in));
    out += "q1_m3h,q2_m3h,deck_dp_pa,deck_power_w,status\n";
    for (const auto& r : results) {
        if (r.injection_id_in == injection_id_in) {
            out += fmt::format("{},{},{},{},{}\n", num(r.flow.q1_injection_m3h),
                               num(r.flow.q2_recirculation_m3h), num(r.deck_dp_pa),
                               num(r.deck_power_w), to_string(r.status));
        }
    }
    return out;
}

json curve_json(const std::vector<ScenarioResult>& results, double injection_id_in,
                const SweepDefinition& def)
{
    json q1 = json::array(), q2 = json::array(), dp = json::array(), pw = json::array(),
         st = json::array();
    for (const auto& r : results) {
        if (r.injection_id_in == injection_id_in) {
            q1.push_back(r.flow.q1_injection_m3h);
            q2.push_back(r.flow.q2_recirculation_m3h);
            dp.push_back(jnum(r.deck_dp_pa));
            pw.push_back(jnum(r.deck_power_w));
            st.push_back(to_string(r.status));
        }
    }
    return {{"assumptions", assumptions_json(def)},
            {"injection_id_in", injection_id_in},
            {"q1_m3h", q1},
            {"q2_m3h", q2},
            {"deck_dp_pa", dp},
            {"deck_power_w", pw},
            {"status", st}};
}

FlushSeries flush_series(const FlushSystem& system, double rate_m3h, double duration_s,
                         double step_s)
{
    if (!(step_s > 0.0)) {
        throw ValidationError("flush step must be > 0");
    }
    if (!(duration_s >= 0.0)) {
        throw ValidationError("flush duration must be >= 0");
    }
    FlushSeries s;
    s.rate_m3h = rate_m3h;
    // Integer stepping keeps the sample count exact: floor(duration/step) + 1.
    const auto steps = static_cast<long>(std::floor(duration_s / step_s + 1e-9));
    for (long i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * step_s;
        const FlushSchedule schedule{rate_m3h, t};
        s.time_s.push_back(t);
        s.tau.push_back(dimensionless_time(system, schedule).tau);
        s.oil_fraction.push_back(oil_fraction_at(system, schedule));
    }
    if (system.target_oil_fraction > 0.0) {
        s.time_to_target_s = time_to_target(system, rate_m3h);
        s.required_volume_m3 = required_flush_volume(system);
    }
    return s;
}

std::string flush_series_csv(const FlushSeries& s, const FlushSystem& system)
{
    std::string out = fmt::format(
        "# system: total_volume_m3={} initial_oil_fraction={} target_oil_fraction={}\n"
        "# rate_m3h={} time_to_target_s={} required_volume_m3={}\n",
        num(system.total_volume_m3), num(system.initial_oil_fraction),
        num(system.target_oil_fraction), num(s.rate_m3h), num(s.time_to_target_s),
        num(s.required_volume_m3));
    out += "time_s,tau,oil_fraction\n";
    for (std::size_t i = 0; i < s.time_s.size(); ++i) {
        out += fmt::format("{},{},{}\n", num(s.time_s[i]), num(s.tau[i]), num(s.oil_fraction[i]));
    }
    return out;
}

json flush_series_json(const FlushSeries& s, const FlushSystem& system)
{
    return {{"system",
             {{"total_volume_m3", system.total_volume_m3},
              {"initial_oil_fraction", system.initial_oil_fraction},
              {"target_oil_fraction", system.target_oil_fraction}}},
            {"rate_m3h", s.rate_m3h},
            {"time_to_target_s", jnum(s.time_to_target_s)},
            {"required_volume_m3", jnum(s.required_volume_m3)},
            {"time_s", s.time_s},
            {"tau", s.tau},
            {"oil_fraction", s.oil_fraction}};
}

std::string flush_summary_text(const FlushSeries& s, const FlushSystem& system)
{
    std::string out;
    out += fmt::format("Flushed volume        {} m3\n", num(system.total_volume_m3));
    out += fmt::format("Initial oil fraction  {}\n", num(system.initial_oil_fraction));
    out += fmt::format("Target oil fraction   {}\n", num(system.target_oil_fraction));
    out += fmt::format("Injection rate        {} m3/h\n", num(s.rate_m3h));
    if (s.time_to_target_s) {
        out += fmt::format("Time to target        {:.1f} s ({:.2f} h)\n", *s.time_to_target_s,
                           *s.time_to_target_s / units::kSecondsPerHour);
        out += fmt::format("Injected volume       {:.3f} m3 (tau = {:.3f})\n",
                           *s.required_volume_m3, *s.required_volume_m3 / system.total_volume_m3);
    } else {
        out += "Time to target        unreachable (target fraction is zero)\n";
    }
    if (!s.time_s.empty()) {
        out += fmt::format("Fraction at {} s      {:.6f}\n", num(s.time_s.back()),
                           s.oil_fraction.back());
    }
    return out;
}

std::string reel_table_text(const std::vector<ReelRow>& rows, double material_density_kg_m3)
{
    std::string out = fmt::format(
        "Reel sizing (conduit density {} kg/m3)\n"
        "{:<18} {:>5} {:>6} {:>8} {:>6} {:>6} {:>6} {:>10} {:>8} {:>8} {:>9} {:>8}  {}\n",
        num(material_density_kg_m3), "product", "ID", "OD", "K", "core", "width", "stack",
        "capacity", "spool", "nominal", "linear", "total", "status");
    out += fmt::format("{:<18} {:>5} {:>6} {:>8} {:>6} {:>6} {:>6} {:>10} {:>8} {:>8} {:>9} {:>8}\n",
                       "", "[in]", "[in]", "[-]", "[in]", "[in]", "[in]", "[m]", "[m3]", "[kg/m]",
                       "[kg/m]", "[t]");
    for (const auto& row : rows) {
        const auto& p = row.product;
        const auto& r = row.result;
        out += fmt::format(
            "{:<18} {:>5} {:>6} {:>8.4f} {:>6} {:>6} {:>6} {:>10.1f} {:>8.2f} {:>8} {:>9.2f} "
            "{:>8.1f}  {}\n",
            p.name, num(p.internal_diameter_in), num(p.outside_diameter_in), r.spec.k_factor,
            num(r.spec.core_diameter_in), num(r.spec.drum_width_in),
            num(r.spec.tubing_stack_height_in), r.capacity.meters, r.spool_volume_m3,
            p.nominal_mass_kg_m ? num(*p.nominal_mass_kg_m) : std::string("-"),
            r.linear_mass_kg_m, r.total_mass_t,
            r.capacity_short ? fmt::format("SHORT (< {:.0f} m required)", r.required_length_m)
                             : std::string("ok"));
    }
    return out;
}

std::string reel_table_csv(const std::vector<ReelRow>& rows, double material_density_kg_m3)
{
    std::string out = fmt::format("# material_density_kg_m3={}\n", num(material_density_kg_m3));
    out += "product,kind,id_in,od_in,k_factor,core_in,width_in,stack_in,capacity_ft,capacity_m,"
           "spool_volume_m3,nominal_mass_kg_m,linear_mass_kg_m,total_mass_kg,required_length_m,"
           "capacity_short\n";
    for (const auto& row : rows) {
        const auto& p = row.product;
        const auto& r = row.result;
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", p.name,
                           to_string(p.kind), num(p.internal_diameter_in),
                           num(p.outside_diameter_in), num(r.spec.k_factor),
                           num(r.spec.core_diameter_in), num(r.spec.drum_width_in),
                           num(r.spec.tubing_stack_height_in), num(r.capacity.feet),
                           num(r.capacity.meters), num(r.spool_volume_m3),
                           num(p.nominal_mass_kg_m), num(r.linear_mass_kg_m),
                           num(r.total_mass_t * 1000.0), num(r.required_length_m),
                           r.capacity_short);
    }
    return out;
}

json reel_table_json(const std::vector<ReelRow>& rows, double material_density_kg_m3)
{
    json arr = json::array();
    for (const auto& row : rows) {
        const auto& p = row.product;
        const auto& r = row.result;
        arr.push_back({{"product", p.name},
                       {"kind", std::string(to_string(p.kind))},
                       {"id_in", p.internal_diameter_in},
                       {"od_in", p.outside_diameter_in},
                       {"k_factor", r.spec.k_factor},
                       {"core_in", r.spec.core_diameter_in},
                       {"width_in", r.spec.drum_width_in},
                       {"stack_in", r.spec.tubing_stack_height_in},
                       {"capacity_ft", r.capacity.feet},
                       {"capacity_m", r.capacity.meters},
                       {"spool_volume_m3", r.spool_volume_m3},
                       {"nominal_mass_kg_m", jnum(p.nominal_mass_kg_m)},
                       {"linear_mass_kg_m", r.linear_mass_kg_m},
                       {"total_mass_kg", r.total_mass_t * 1000.0},
                       {"required_length_m", r.required_length_m},
                       {"capacity_short", r.capacity_short}});
    }
    return {{"material_density_kg_m3", material_density_kg_m3}, {"reels", arr}};
}

std::string comparison_text(const ComparisonReport& report, const std::string& note)
{
    const auto& def = report.definition;
    std::string out = "Single-pass vs recirculation flushing\n\n";
    out += assumptions_text(def, note);
    for (const auto& g : report.groups) {
        out += fmt::format("\nInjection line {} in\n", num(g.injection_id_in));
        out += fmt::format("  {:<14} {:>6} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}  {}\n",
                           "method", "Q1", "Q2", "deck dp", "power", "time", "MEG vol",
                           "CO2 eqdp", "CO2 act", "feasibility");
        out += fmt::format("  {:<14} {:>6} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}\n", "",
                           "[m3/h]", "[m3/h]", "[bar]", "[kW]", "[h]", "[m3]", "[t]", "[t]");
        auto line = [&](const char* method, const ComparisonRow& row) {
            const auto& r = row.result;
            std::string time = "not modeled";
            if (r.flushing_time_to_target_s) {
                time = fmt::format("{:.2f}", *r.flushing_time_to_target_s / 3600.0);
            } else if (!r.ok()) {
                time = "-";
            }
            std::string feas;
            for (const auto& f : r.feasibility) {
                feas += fmt::format("{}{} {} ({:+.0f} bar)", feas.empty() ? "" : ", ", f.product,
                                    f.pass ? "pass" : "FAIL", units::pa_to_bar(f.margin_pa));
            }
            if (!r.ok()) {
                feas = fmt::format("{}: {}", to_string(r.status), r.failure);
            }
            out += fmt::format(
                "  {:<14} {:>6} {:>6} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}  {}\n", method,
                num(r.flow.q1_injection_m3h), num(r.flow.q2_recirculation_m3h),
                bar_text(r.deck_dp_pa), kw_text(r.deck_power_w), time,
                std::isfinite(r.injected_volume_m3) ? fmt::format("{:.2f}", r.injected_volume_m3)
                                                    : std::string("-"),
                std::isfinite(row.co2_equal_dp_t) ? fmt::format("{:.3f}", row.co2_equal_dp_t)
                                                  : std::string("-"),
                std::isfinite(row.co2_actual_dp_t) ? fmt::format("{:.3f}", row.co2_actual_dp_t)
                                                   : std::string("-"),
                feas);
        };
        line("single-pass", g.single_pass);
        for (const auto& row : g.recirculation) {
            line("recirculation", row);
        }
        const auto& b = g.breakeven;
        out += fmt::format(
            "  breakeven (equal deck dp): Q_trad*t_trad = {:.3f} m3, threshold = {:.3f} m3{}, "
            "exact ln(a0/target)*V = {:.4f} m3 -> {}\n",
            b.traditional_volume_m3, b.threshold_volume_m3,
            b.uses_rounded_constant ? " (4.6 V)" : "", b.generalized_threshold_m3,
            to_string(b.verdict));
    }
    out += "\n\"CO2 act\" uses each case's solved deck pressure (extension to the equal-"
           "pressure comparison).\n";
    return out;
}

std::string comparison_csv(const ComparisonReport& report, const std::string& note)
{
    std::string out = assumptions_csv_comment(report.definition, note);
    out += "injection_id_in,method,q1_m3h,q2_m3h,status,deck_dp_pa,deck_power_w,"
           "flushing_time_to_target_s,flushing_duration_s,injected_volume_m3,co2_equal_dp_t,"
           "co2_actual_dp_t,feasibility,breakeven_traditional_volume_m3,breakeven_threshold_m3,"
           "breakeven_generalized_threshold_m3,breakeven_verdict\n";
    for (const auto& g : report.groups) {
        auto row = [&](const char* method, const ComparisonRow& c) {
            const auto& r = c.result;
            out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                               num(g.injection_id_in), method, num(r.flow.q1_injection_m3h),
                               num(r.flow.q2_recirculation_m3h), to_string(r.status),
                               num(r.deck_dp_pa), num(r.deck_power_w),
                               num(r.flushing_time_to_target_s), num(r.flushing_duration_s),
                               num(r.injected_volume_m3), num(c.co2_equal_dp_t),
                               num(c.co2_actual_dp_t), feasibility_cell(r.feasibility),
                               num(g.breakeven.traditional_volume_m3),
                               num(g.breakeven.threshold_volume_m3),
                               num(g.breakeven.generalized_threshold_m3),
                               to_string(g.breakeven.verdict));
        };
        row("single-pass", g.single_pass);
        for (const auto& c : g.recirculation) {
            row("recirculation", c);
        }
    }
    return out;
}

json comparison_json(const ComparisonReport& report, const std::string& note)
{
    json groups = json::array();
    for (const auto& g : report.groups) {
        auto row = [](const ComparisonRow& c) {
            json j = result_json(c.result);
            j["co2_equal_dp_t"] = jnum(c.co2_equal_dp_t);
            j["co2_actual_dp_t"] = jnum(c.co2_actual_dp_t);
            return j;
        };
        json recirc = json::array();
        for (const auto& c : g.recirculation) {
            recirc.push_back(row(c));
        }
        const auto& b = g.breakeven;
        groups.push_back({{"injection_id_in", g.injection_id_in},
                          {"single_pass", row(g.single_pass)},
                          {"recirculation", recirc},
                          {"breakeven",
                           {{"traditional_volume_m3", b.traditional_volume_m3},
                            {"threshold_volume_m3", b.threshold_volume_m3},
                            {"generalized_threshold_m3", b.generalized_threshold_m3},
                            {"uses_rounded_constant", b.uses_rounded_constant},
                            {"verdict", to_string(b.verdict)},
                            {"new_method_emits_less", b.new_method_emits_less}}}});
    }
    return {{"assumptions", assumptions_json(report.definition, note)},
            {"actual_dp_mode", "extension: CO2 at each case's solved deck pressure"},
            {"groups", groups}};
}

std::string fit_report_text(const MeasuredCurve& curve, const FlushSystem& system,
                            const FitReport& fit)
{
    std::string out = fmt::format("Model fit for {} ({} points, {} m3/h, V = {} m3)\n",
                                  curve.source, curve.points.size(), num(curve.injection_rate_m3h),
                                  num(system.total_volume_m3));
    out += fmt::format("  RMSE                 {:.6g}\n", fit.rmse);
    out += fmt::format("  max |error|          {:.6g}\n", fit.max_abs_error);
    out += fmt::format("  terminal model frac  {:.6f}\n", fit.terminal_model_fraction);
    if (fit.fitted_volume_m3) {
        out += fmt::format("  fitted volume        {:.6g} m3\n", *fit.fitted_volume_m3);
    } else {
        out += "  fitted volume        n/a (no decaying points)\n";
    }
    return out;
}

std::string fit_report_csv(const MeasuredCurve& curve, const FlushSystem& system,
                           const FitReport& fit)
{
    std::string out = fmt::format(
        "# source={} rate_m3h={} total_volume_m3={} initial_oil_fraction={}\n"
        "# rmse={} max_abs_error={} fitted_volume_m3={}\n",
        curve.source, num(curve.injection_rate_m3h), num(system.total_volume_m3),
        num(system.initial_oil_fraction), num(fit.rmse), num(fit.max_abs_error),
        num(fit.fitted_volume_m3));
    out += "time_s,measured_oil_fraction,model_oil_fraction,residual\n";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        out += fmt::format("{},{},{},{}\n", num(curve.points[i].time_s),
                           num(curve.points[i].oil_fraction), num(fit.model_fraction[i]),
                           num(fit.residual[i]));
    }
    return out;
}

json fit_report_json(const MeasuredCurve& curve, const FlushSystem& system, const FitReport& fit)
{
    json t = json::array(), m = json::array();
    for (const auto& p : curve.points) {
        t.push_back(p.time_s);
        m.push_back(p.oil_fraction);
    }
    return {{"source", curve.source},
            {"rate_m3h", curve.injection_rate_m3h},
            {"system",
             {{"total_volume_m3", system.total_volume_m3},
              {"initial_oil_fraction", system.initial_oil_fraction}}},
            {"rmse", fit.rmse},
            {"max_abs_error", fit.max_abs_error},
            {"fitted_volume_m3", jnum(fit.fitted_volume_m3)},
            {"terminal_model_fraction", fit.terminal_model_fraction},
            {"time_s", t},
            {"measured_oil_fraction", m},
            {"model_oil_fraction", fit.model_fraction},
            {"residual", fit.residual}};
}

} // namespace subseaflush::report
