#include "subseaflush/scenario.h"

#include "subseaflush/errors.h"
#include "subseaflush/units.h"

#include <atomic>
#include <cmath>
#include <fmt/format.h>
#include <thread>

namespace subseaflush {

namespace {

constexpr double kSameBoreTolerance = 1e-6;

std::vector<Feasibility> feasibility_for(const ConduitCatalog& catalog, double injection_id_in,
                                         double deck_dp_pa)
{
    std::vector<Feasibility> out;
    for (const auto& p : catalog.products()) {
        if (p.max_working_pressure_pa
            && std::abs(p.internal_diameter_in - injection_id_in) < kSameBoreTolerance) {
            out.push_back(pressure_feasibility(p, deck_dp_pa));
        }
    }
    return out;
}

double co2_for(double dp_pa, double q_m3h, double efficiency, double duration_s,
               const EmissionFactor& factor)
{
    return pumping_co2({dp_pa, q_m3h, efficiency, duration_s}, factor);
}

} // namespace

std::vector<double> default_q1_values()
{
    return {5, 6, 7, 8, 9, 10, 12, 14, 16, 18, 20, 22, 24, 25};
}

void SweepDefinition::validate() const
{
    if (!(total_target_rate_m3h > 0.0)) {
        throw ValidationError("sweep.total_rate_m3h must be > 0");
    }
    if (q1_values_m3h.empty()) {
        throw ValidationError("sweep.q1_values_m3h must not be empty");
    }
    if (injection_ids_in.empty()) {
        throw ValidationError("sweep.injection_ids_in must not be empty");
    }
    for (double q1 : q1_values_m3h) {
        if (!(q1 > 0.0 && q1 <= total_target_rate_m3h)) {
            throw ValidationError(fmt::format(
                "sweep.q1_values_m3h: {} must be in (0, sweep.total_rate_m3h = {}]", q1,
                total_target_rate_m3h));
        }
    }
    for (double id : injection_ids_in) {
        if (!(id > 0.0)) {
            throw ValidationError("sweep.injection_ids_in: every bore must be > 0");
        }
    }
    if (!(single_pass_duration_s >= 0.0)) {
        throw ValidationError("sweep.single_pass_duration_s must be >= 0");
    }
    fluid.validate();
    efficiencies.validate();
    system.validate();
    emission.validate();
    make_reference_loop(loop).validate();
}

const char* to_string(CaseStatus s)
{
    switch (s) {
    case CaseStatus::Ok:
        return "ok";
    case CaseStatus::ConvergenceFailure:
        return "convergence-failure";
    case CaseStatus::Infeasible:
        return "infeasible";
    }
    return "ok";
}

ScenarioResult evaluate_case(const SweepDefinition& def, double injection_id_in,
                             const FlowCase& flow)
{
    ScenarioResult r;
    r.flow = flow;
    r.injection_id_in = injection_id_in;

    ReferenceLoopParams params = def.loop;
    params.injection_id_in = injection_id_in;
    const LoopGeometry geometry = make_reference_loop(params);

    try {
        r.nodes = solve_loop(geometry, flow, def.fluid, def.efficiencies, def.solver);
    } catch (const ConvergenceError& e) {
        r.status = CaseStatus::ConvergenceFailure;
        r.failure = e.what();
    } catch (const InfeasibleError& e) {
        r.status = CaseStatus::Infeasible;
        r.failure = e.what();
    }
    if (!r.ok()) {
        const double nan = std::nan("");
        r.deck_dp_pa = r.deck_power_w = r.subsea_dp_pa = r.subsea_power_w = nan;
        r.injected_volume_m3 = r.co2_t = r.flushing_duration_s = nan;
        return r;
    }

    r.deck_dp_pa = r.nodes.deck_pump_dp_pa;
    r.deck_power_w = deck_pump_power(r.deck_dp_pa, flow.q1_injection_m3h, def.efficiencies);
    r.subsea_dp_pa = r.nodes.subsea_pump_dp_pa;
    r.subsea_power_w =
        subsea_pump_power(r.subsea_dp_pa, flow.q2_recirculation_m3h, def.efficiencies);

    if (flow.q2_recirculation_m3h > 0.0) {
        r.flushing_time_to_target_s = time_to_target(def.system, flow.q1_injection_m3h);
        r.flushing_duration_s = *r.flushing_time_to_target_s;
    } else {
        r.flushing_duration_s = def.single_pass_duration_s;
    }
    r.injected_volume_m3 = units::m3h_to_m3s(flow.q1_injection_m3h) * r.flushing_duration_s;
    r.co2_t = co2_for(r.deck_dp_pa, flow.q1_injection_m3h, def.efficiencies.deck_pump,
                      r.flushing_duration_s, def.emission);
    r.feasibility = feasibility_for(def.catalog, injection_id_in, r.deck_dp_pa);
    return r;
}

std::vector<ScenarioResult> run_sweep(const SweepDefinition& def)
{
    def.validate();

    struct Job {
        double id_in;
        FlowCase flow;
    };
    std::vector<Job> jobs;
    for (double id : def.injection_ids_in) {
        for (double q1 : def.q1_values_m3h) {
            jobs.push_back({id, {q1, def.total_target_rate_m3h - q1}});
        }
    }

    std::vector<ScenarioResult> results(jobs.size());
    const unsigned workers =
        def.parallel ? std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(jobs.size())))
                     : 1u;
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            results[i] = evaluate_case(def, jobs[i].id_in, jobs[i].flow);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < jobs.size(); i = next++) {
                    results[i] = evaluate_case(def, jobs[i].id_in, jobs[i].flow);
                }
            });
        }
    }
    return results;
}

ComparisonReport compare_methods(const SweepDefinition& def, const FlushSystem& system,
                                 const EmissionFactor& factor)
{
    SweepDefinition d = def;
    d.system = system;
    d.emission = factor;
    d.validate();

    ComparisonReport report;
    report.definition = d;
    const double eta = d.efficiencies.deck_pump;

    for (double id : d.injection_ids_in) {
        ComparisonGroup group;
        group.injection_id_in = id;

        auto& sp = group.single_pass;
        sp.result = evaluate_case(d, id, {d.total_target_rate_m3h, 0.0});
        sp.co2_actual_dp_t = sp.result.co2_t;
        sp.co2_equal_dp_t = sp.result.co2_t;

        for (double q1 : d.q1_values_m3h) {
            const double q2 = d.total_target_rate_m3h - q1;
            if (q2 <= 0.0) {
                continue;
            }
            ComparisonRow row;
            row.result = evaluate_case(d, id, {q1, q2});
            row.co2_actual_dp_t = row.result.co2_t;
            row.co2_equal_dp_t =
                sp.result.ok() && row.result.ok()
                    ? co2_for(sp.result.deck_dp_pa, q1, eta, row.result.flushing_duration_s, factor)
                    : std::nan("");
            group.recirculation.push_back(std::move(row));
        }

        const double trad_dp = sp.result.ok() ? sp.result.deck_dp_pa : 0.0;
        group.breakeven = breakeven_new_vs_traditional(
            {trad_dp, d.total_target_rate_m3h, eta, d.single_pass_duration_s}, system);
        report.groups.push_back(std::move(group));
    }
    return report;
}

} // namespace subseaflush
