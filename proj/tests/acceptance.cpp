// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "oracles.h"
#include "subseaflush/cli.h"
#include "subseaflush/config.h"
#include "subseaflush/core_model.h"
#include "subseaflush/emissions.h"
#include "subseaflush/equipment.h"
#include "subseaflush/hydraulics.h"
#include "subseaflush/scenario.h"
#include "subseaflush/units.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace subseaflush;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, std::string note)
    {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED " + std::move(note));
        }
    }
    void info(std::string note) { notes.push_back(std::move(note)); }
};

bool within_rel(double got, double want, double rel)
{
    return std::abs(got - want) <= rel * std::abs(want);
}

Outcome mixing_exactness()
{
    Outcome o;
    const FlushSystem s{1.0, 1.0, 0.01};
    const double a = oil_fraction_at_tau(s, {4.6});
    o.check(std::abs(a - 0.0100) <= 1e-6, fmt::format("alpha(4.6) = {:.9f}, want 0.0100 +- 1e-6", a));
    o.info(fmt::format("alpha(tau=4.6) = {:.9f}", a));
    const double exact_tau = -std::log(0.01);
    o.info(fmt::format("alpha(tau=-ln 0.01 = {:.5f}) = {:.9f}", exact_tau,
                       oil_fraction_at_tau(s, {exact_tau})));
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double tau = 0.1 * i;
        const double numeric = oracle::mixed_tank_fraction(1.0, 1.0, 1.0, tau * 3600.0, 10.0);
        const double closed = oil_fraction_at(s, {1.0, tau * 3600.0});
        worst = std::max(worst, std::abs(closed - numeric) / numeric);
    }
    o.check(worst <= 1e-6, fmt::format("max relative ODE deviation {:.3e}", worst));
    o.info(fmt::format("max relative deviation from RK4 over tau in [0,10]: {:.3e}", worst));
    return o;
}

struct TableRow {
    const char* product;
    double capacity_m;
    double spool_m3;
    double mass_t;
};

Outcome reel_table(const std::array<TableRow, 4>& rows)
{
    Outcome o;
    const auto catalog = ConduitCatalog::builtin();
    const auto table = KFactorTable::builtin();
    for (const auto& row : rows) {
        const auto& p = catalog.find(row.product);
        const auto spec = reel_spec_for(p, KFactorSource::Geometric, table);
        const auto r = size_reel(p, spec, kSteelDensity, 2400.0);
        const double dc = r.capacity.meters / row.capacity_m - 1.0;
        const double dv = r.spool_volume_m3 / row.spool_m3 - 1.0;
        const double dm = r.total_mass_t / row.mass_t - 1.0;
        o.check(std::abs(dc) <= 0.01, fmt::format("{} capacity {:.1f} m vs {} ({:+.2f}%)",
                                                  row.product, r.capacity.meters, row.capacity_m,
                                                  100 * dc));
        o.check(std::abs(dv) <= 0.02, fmt::format("{} spool {:.2f} m3 vs {} ({:+.2f}%)", row.product,
                                                  r.spool_volume_m3, row.spool_m3, 100 * dv));
        o.check(std::abs(dm) <= 0.05, fmt::format("{} mass {:.1f} t vs {} ({:+.2f}%)", row.product,
                                                  r.total_mass_t, row.mass_t, 100 * dm));
        o.info(fmt::format("{}: capacity {:+.2f}%, spool {:+.2f}%, mass {:+.2f}%", row.product,
                           100 * dc, 100 * dv, 100 * dm));
    }
    return o;
}

Outcome coiled_tubing_table()
{
    return reel_table({{{"HV-70", 2444.6, 6.4, 7.9},
                        {"HS-70", 2457.0, 10.5, 16.3},
                        {"CT-3.0", 2444.6, 25.7, 31.6},
                        {"CT-4.0", 2441.9, 38.3, 41.3}}});
}

Outcome flexible_pipe_table()
{
    return reel_table({{{"COFLEXIP-1.5-5K", 2420.3, 21.8, 53.2},
                        {"COFLEXIP-2.0-5K", 2457.2, 33.2, 76.8},
                        {"COFLEXIP-3.0-5K", 2409.7, 54.1, 119.8},
                        {"COFLEXIP-4.0-5K", 2399.3, 93.1, 208.2}}});
}

Outcome hydrostatic_anchor()
{
    Outcome o;
    const auto m = solve_loop(make_reference_loop({}), {25.0, 0.0}, FluidProperties{},
                              MachineEfficiencies{});
    const double bar = units::pa_to_bar(m.at('J') - m.at('K'));
    o.check(std::abs(bar - 217.8) <= 0.1, fmt::format("P_J - P_K = {:.3f} bar", bar));
    o.info(fmt::format("P_J - P_K = {:.3f} bar", bar));
    return o;
}

Outcome sweep_properties()
{
    Outcome o;
    SweepDefinition def;
    def.efficiencies.deck_pump = 0.85;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rs = run_sweep(def);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(rs.size() == 56, fmt::format("{} cases", rs.size()));
    o.check(secs < 1.0, fmt::format("sweep took {:.3f} s", secs));
    o.info(fmt::format("56-case sweep in {:.4f} s", secs));

    // (a) energy consistency
    double worst = 0.0;
    for (const auto& r : rs) {
        o.check(r.ok(), fmt::format("case {} in / Q1 {} failed: {}", r.injection_id_in,
                                    r.flow.q1_injection_m3h, r.failure));
        const double expected = r.deck_dp_pa * r.flow.q1_injection_m3h / 3600.0 / 0.85;
        worst = std::max(worst, std::abs(r.deck_power_w - expected) / expected);
    }
    o.check(worst <= 1e-9, fmt::format("(a) power consistency {:.3e}", worst));
    o.info(fmt::format("(a) max relative power deviation {:.3e}", worst));

    // (b) recirculation ordering on the smallest line
    const SweepDefinition base;
    const auto recirc = evaluate_case(base, 1.5, {15.0, 10.0});
    const auto single = evaluate_case(base, 1.5, {25.0, 0.0});
    o.check(recirc.deck_dp_pa < single.deck_dp_pa,
            fmt::format("(b) deck dp {:.1f} bar at 15/10 vs {:.1f} bar at 25/0",
                        units::pa_to_bar(recirc.deck_dp_pa), units::pa_to_bar(single.deck_dp_pa)));
    o.info(fmt::format("(b) 1.5 in: {:.1f} bar at Q1=15/Q2=10, {:.1f} bar at Q1=25/Q2=0",
                       units::pa_to_bar(recirc.deck_dp_pa), units::pa_to_bar(single.deck_dp_pa)));

    // (c) monotone in Q1 per bore
    for (double id : def.injection_ids_in) {
        double previous = -1.0;
        double previous_q1 = 0.0;
        int drops = 0;
        std::string first_drop;
        for (const auto& r : rs) {
            if (r.injection_id_in != id) {
                continue;
            }
            if (r.deck_dp_pa < previous) {
                if (drops++ == 0) {
                    first_drop = fmt::format("{:.2f} bar at Q1={} after {:.2f} bar at Q1={}",
                                             units::pa_to_bar(r.deck_dp_pa),
                                             r.flow.q1_injection_m3h,
                                             units::pa_to_bar(previous), previous_q1);
                }
            }
            previous = r.deck_dp_pa;
            previous_q1 = r.flow.q1_injection_m3h;
        }
        o.check(drops == 0,
                fmt::format("(c) {} in: {} decreasing steps, first {}", id, drops, first_drop));
        if (drops == 0) {
            o.info(fmt::format("(c) {} in: deck dp non-decreasing in Q1", id));
        }
    }

    // (d) HV-70 rating against single pass and recirculation
    const auto& hv = base.catalog.find("HV-70");
    const auto fsingle = pressure_feasibility(hv, single.deck_dp_pa);
    o.check(!fsingle.pass, fmt::format("(d) single-pass 1.5 in needs {:.1f} bar, within the "
                                       "510 bar rating",
                                       units::pa_to_bar(single.deck_dp_pa)));
    bool some_recirc_passes = false;
    for (const auto& r : rs) {
        if (r.injection_id_in == 1.5 && r.flow.q2_recirculation_m3h > 0.0
            && pressure_feasibility(hv, r.deck_dp_pa).pass) {
            some_recirc_passes = true;
        }
    }
    o.check(some_recirc_passes, "(d) no recirculation case within the HV-70 rating");
    o.info(fmt::format("(d) single-pass 1.5 in deck dp {:.1f} bar vs HV-70 510 bar",
                       units::pa_to_bar(single.deck_dp_pa)));
    return o;
}

Outcome loop_closure()
{
    Outcome o;
    const SweepDefinition def;
    double worst_residual = 0.0;
    double worst_reeval = 0.0;
    double worst_continuity = 0.0;
    for (double id : def.injection_ids_in) {
        ReferenceLoopParams p = def.loop;
        p.injection_id_in = id;
        const auto g = make_reference_loop(p);
        for (double q1 : def.q1_values_m3h) {
            const FlowCase flow{q1, def.total_target_rate_m3h - q1};
            const auto m = solve_loop(g, flow, def.fluid, def.efficiencies, def.solver);
            worst_residual = std::max(worst_residual, std::abs(m.closure_residual_pa));
            const auto again = evaluate_loop(g, flow, def.fluid, def.efficiencies, m.at('G'));
            for (char n : kLoopNodes) {
                worst_reeval = std::max(worst_reeval, std::abs(again.at(n) - m.at(n)));
            }
        }
        const auto zero = solve_loop(g, {25.0, 0.0}, def.fluid, def.efficiencies, def.solver);
        const auto tiny = solve_loop(g, {25.0, 1e-6}, def.fluid, def.efficiencies, def.solver);
        for (char n : kLoopNodes) {
            worst_continuity = std::max(worst_continuity, std::abs(zero.at(n) - tiny.at(n)));
        }
    }
    o.check(worst_residual < 100.0, fmt::format("closure residual {:.3f} Pa", worst_residual));
    o.check(worst_reeval < 1.0, fmt::format("re-evaluation {:.3e} Pa", worst_reeval));
    o.check(worst_continuity < 100.0, fmt::format("q2->0 continuity {:.3f} Pa", worst_continuity));
    o.info(fmt::format("max residual {:.3f} Pa, re-evaluation {:.3e} Pa, q2->0 gap {:.3f} Pa",
                       worst_residual, worst_reeval, worst_continuity));
    return o;
}

Outcome emissions()
{
    Outcome o;
    const EmissionFactor f{0.7};
    const double high = pumping_co2({700e3 * 3600.0, 1.0, 1.0, 2 * 3600.0}, f);
    const double low = pumping_co2({250e3 * 3600.0, 1.0, 1.0, 4 * 3600.0}, f);
    o.check(std::abs(high - 0.98) <= 0.01, fmt::format("700 kW x 2 h -> {:.4f} t", high));
    o.check(std::abs(low - 0.70) <= 0.01, fmt::format("250 kW x 4 h -> {:.4f} t", low));
    const auto b =
        breakeven_new_vs_traditional({1e7, 4.6, 1.0, 3600.0}, FlushSystem{1.0, 1.0, 0.01});
    o.check(b.verdict == BreakevenVerdict::Equal,
            fmt::format("boundary verdict {}", to_string(b.verdict)));
    o.info(fmt::format("{:.4f} t vs {:.4f} t ({:.1f}% lower); Q t = 4.6 V -> {}", high, low,
                       100 * (1.0 - low / high), to_string(b.verdict)));
    return o;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome determinism()
{
    Outcome o;
    const auto root = fs::temp_directory_path() / "flushplan_acceptance_determinism";
    fs::remove_all(root);
    for (const char* fmt_name : {"csv", "json"}) {
        std::array<fs::path, 2> dirs = {root / fmt::format("{}_a", fmt_name),
                                        root / fmt::format("{}_b", fmt_name)};
        for (const auto& d : dirs) {
            const std::string out = d.string();
            const char* argv[] = {"flushplan", "--format", fmt_name, "sweep", "--out", out.c_str()};
            std::ostringstream sink;
            const int code = run_cli(6, argv, sink, sink);
            o.check(code == 0, fmt::format("sweep exit code {}", code));
        }
        int files = 0;
        for (const auto& e : fs::directory_iterator(dirs[0])) {
            ++files;
            const auto name = e.path().filename();
            o.check(slurp(e.path()) == slurp(dirs[1] / name),
                    fmt::format("{} differs between runs", name.string()));
        }
        o.check(files == 5, fmt::format("{} output files", files));
        o.info(fmt::format("{}: {} files byte-identical across runs", fmt_name, files));
    }
    fs::remove_all(root);
    return o;
}

Outcome fit_consistency()
{
    Outcome o;
    const FlushSystem s{0.165, 1.0, 0.01};
    MeasuredCurve c;
    c.injection_rate_m3h = 5.0;
    for (int i = 0; i <= 60; ++i) {
        c.points.push_back({10.0 * i, oil_fraction_at(s, {5.0, 10.0 * i})});
    }
    const auto fit = fit_model_to_curve(c, s);
    o.check(fit.rmse < 1e-12, fmt::format("RMSE {:.3e}", fit.rmse));

    const FlushSystem v{0.42, 1.0, 0.01};
    MeasuredCurve half;
    half.injection_rate_m3h = 3.0;
    half.points = {{0.0, 1.0}, {v.total_volume_m3 / (3.0 / 3600.0) * std::log(2.0), 0.5}};
    const auto hf = fit_model_to_curve(half, v);
    const double rel = hf.fitted_volume_m3
                           ? std::abs(*hf.fitted_volume_m3 - v.total_volume_m3) / v.total_volume_m3
                           : 1.0;
    o.check(rel <= 1e-6, fmt::format("half-life volume error {:.3e}", rel));
    o.info(fmt::format("RMSE {:.3e}; half-life volume relative error {:.3e}", fit.rmse, rel));
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 mixing model exactness", mixing_exactness},
        {"2 coiled tubing reel table", coiled_tubing_table},
        {"3 flexible steel pipe reel table", flexible_pipe_table},
        {"4 hydrostatic anchor", hydrostatic_anchor},
        {"5 sweep properties", sweep_properties},
        {"6 loop closure", loop_closure},
        {"7 emissions", emissions},
        {"8 determinism", determinism},
        {"9 fit self-consistency", fit_consistency},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << '\n';
        for (const auto& n : o.notes) {
            std::cout << "      " << n << '\n';
        }
        failed += o.pass ? 0 : 1;
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed,
                             criteria.size());
    return failed == 0 ? 0 : 1;
}
