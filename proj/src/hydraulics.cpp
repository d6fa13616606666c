#include "subseaflush/hydraulics.h"

#include "subseaflush/errors.h"
#include "subseaflush/units.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace subseaflush {

namespace {

constexpr double kLaminarLimit = 2300.0;
constexpr double kTurbulentLimit = 4000.0;

std::size_t node_index(char node)
{
    if (node < 'A' || node > 'K') {
        throw ValidationError(fmt::format("unknown loop node '{}'", node));
    }
    return static_cast<std::size_t>(node - 'A');
}

double swamee_jain(double reynolds, double relative_roughness)
{
    const double arg = relative_roughness / 3.7 + 5.74 / std::pow(reynolds, 0.9);
    const double l = std::log10(arg);
    return 0.25 / (l * l);
}

double velocity_head(double q_m3h, double id_m, const FluidProperties& fluid)
{
    const double v = mean_velocity(q_m3h, id_m);
    return 0.5 * fluid.density_kg_m3 * v * v;
}

double transition_loss_at(const LoopGeometry& g, TransitionSite site, double q_m3h,
                          const FluidProperties& fluid)
{
    double dp = 0.0;
    for (const auto& t : g.transitions) {
        if (t.site == site) {
            dp += transition_dp(q_m3h, t.from_id_m, t.to_id_m, fluid);
        }
    }
    return dp;
}

} // namespace

void FluidProperties::validate() const
{
    if (!(density_kg_m3 > 0.0)) {
        throw ValidationError("fluid.density_kg_m3 must be > 0");
    }
    if (!(dynamic_viscosity_pa_s > 0.0)) {
        throw ValidationError("fluid.dynamic_viscosity_pa_s must be > 0");
    }
}

void ConduitSegment::validate() const
{
    if (!(internal_diameter_m > 0.0)) {
        throw ValidationError(fmt::format("segment {}: internal_diameter must be > 0", label));
    }
    if (!(length_m >= 0.0)) {
        throw ValidationError(fmt::format("segment {}: length must be >= 0", label));
    }
    if (!(roughness_m >= 0.0)) {
        throw ValidationError(fmt::format("segment {}: roughness must be >= 0", label));
    }
}

void LoopGeometry::validate() const
{
    if (!(water_depth_m > 0.0)) {
        throw ValidationError("geometry.water_depth_m must be > 0");
    }
    injection_line.validate();
    recirc_discharge.validate();
    production_upstream_tee.validate();
    production_downstream_tee.validate();
    recirc_suction.validate();
    for (const auto& t : transitions) {
        if (!(t.from_id_m > 0.0 && t.to_id_m > 0.0)) {
            throw ValidationError("geometry: transition diameters must be > 0");
        }
    }
    if (!(return_line_id_m > 0.0)) {
        throw ValidationError("geometry.return_line_id must be > 0");
    }
    if (!(tee_loss_coefficient >= 0.0)) {
        throw ValidationError("geometry.tee_loss_coefficient must be >= 0");
    }
    if (!(tee_branch_id_m > 0.0)) {
        throw ValidationError("geometry.tee_branch_id must be > 0");
    }
}

LoopGeometry make_reference_loop(const ReferenceLoopParams& p)
{
    const double inj = units::inch_to_m(p.injection_id_in);
    const double rec = units::inch_to_m(p.recirc_id_in);
    const double prod = units::inch_to_m(p.production_id_in);

    LoopGeometry g;
    g.water_depth_m = p.water_depth_m;
    g.injection_line = {"A->B", inj, p.water_depth_m, p.roughness_m, p.water_depth_m};
    g.recirc_discharge = {"D->E", rec, p.recirc_discharge_length_m, p.roughness_m, 0.0};
    g.production_upstream_tee = {"E->F", prod, p.production_upstream_length_m, p.roughness_m, 0.0};
    g.production_downstream_tee = {"F->J", prod, p.production_downstream_length_m, p.roughness_m,
                                   0.0};
    g.recirc_suction = {"G->H", rec, p.recirc_suction_length_m, p.roughness_m, 0.0};
    if (p.include_transitions) {
        g.transitions = {
            {TransitionSite::DischargeToProduction, rec, prod},
            {TransitionSite::ProductionToSuction, prod, rec},
        };
    }
    g.return_line_id_m = units::inch_to_m(p.return_id_in);
    g.tee_loss_coefficient = p.tee_loss_coefficient;
    g.tee_branch_id_m = prod;
    return g;
}

void FlowCase::validate() const
{
    if (!(q1_injection_m3h > 0.0)) {
        throw ValidationError("flow.q1_injection_m3h must be > 0");
    }
    if (!(q2_recirculation_m3h >= 0.0)) {
        throw ValidationError("flow.q2_recirculation_m3h must be >= 0");
    }
}

void MachineEfficiencies::validate() const
{
    auto check = [](double v, const char* name) {
        if (!(v > 0.0 && v <= 1.0)) {
            throw ValidationError(fmt::format("efficiencies.{} must be in (0, 1]", name));
        }
    };
    check(deck_pump, "deck_pump");
    check(subsea_pump, "subsea_pump");
    check(subsea_motor, "subsea_motor");
}

double NodePressureMap::at(char node) const
{
    return pressure_pa[node_index(node)];
}

double& NodePressureMap::at(char node)
{
    return pressure_pa[node_index(node)];
}

double mean_velocity(double q_m3h, double id_m)
{
    const double area = units::kPi * id_m * id_m / 4.0;
    return units::m3h_to_m3s(q_m3h) / area;
}

double reynolds_number(double q_m3h, double id_m, const FluidProperties& fluid)
{
    return fluid.density_kg_m3 * mean_velocity(q_m3h, id_m) * id_m / fluid.dynamic_viscosity_pa_s;
}

double darcy_friction_factor(double reynolds, double relative_roughness)
{
    if (!(reynolds > 0.0)) {
        throw ValidationError("darcy_friction_factor: Reynolds number must be > 0");
    }
    if (reynolds < kLaminarLimit) {
        return 64.0 / reynolds;
    }
    if (reynolds >= kTurbulentLimit) {
        return swamee_jain(reynolds, relative_roughness);
    }
    const double w = (reynolds - kLaminarLimit) / (kTurbulentLimit - kLaminarLimit);
    return (1.0 - w) * (64.0 / kLaminarLimit)
           + w * swamee_jain(kTurbulentLimit, relative_roughness);
}

double friction_dp(const ConduitSegment& segment, double q_m3h, const FluidProperties& fluid)
{
    segment.validate();
    fluid.validate();
    if (q_m3h <= 0.0 || segment.length_m == 0.0) {
        return 0.0;
    }
    const double d = segment.internal_diameter_m;
    const double re = reynolds_number(q_m3h, d, fluid);
    const double f = darcy_friction_factor(re, segment.roughness_m / d);
    return f * (segment.length_m / d) * velocity_head(q_m3h, d, fluid);
}

double transition_dp(double q_m3h, double from_id_m, double to_id_m, const FluidProperties& fluid)
{
    if (!(from_id_m > 0.0 && to_id_m > 0.0)) {
        throw ValidationError("transition_dp: diameters must be > 0");
    }
    if (from_id_m == to_id_m || q_m3h <= 0.0) {
        return 0.0;
    }
    const double small = std::min(from_id_m, to_id_m);
    const double large = std::max(from_id_m, to_id_m);
    const double area_ratio = (small / large) * (small / large);
    const double k = from_id_m < to_id_m ? (1.0 - area_ratio) * (1.0 - area_ratio)
                                         : 0.5 * (1.0 - area_ratio);
    return k * velocity_head(q_m3h, small, fluid);
}

NodePressureMap evaluate_loop(const LoopGeometry& g, const FlowCase& flow,
                              const FluidProperties& fluid, const MachineEfficiencies& eff,
                              double p_g_pa)
{
    const double q1 = flow.q1_injection_m3h;
    const double q2 = flow.q2_recirculation_m3h;
    const double q3 = flow.q3_total_m3h();
    const double rho = fluid.density_kg_m3;

    NodePressureMap m;

    // Return side, marched back from the surface.
    m.at('K') = units::kAtmosphere;
    m.at('J') = m.at('K') + rho * units::kGravity * g.water_depth_m;
    const double v_j = mean_velocity(q1, g.return_line_id_m);
    const double v_f = mean_velocity(q3, g.production_upstream_tee.internal_diameter_m);
    m.at('F') = m.at('J') + 0.5 * rho * (v_j * v_j - v_f * v_f)
                + friction_dp(g.production_downstream_tee, q1, fluid);
    const double dp_ef = friction_dp(g.production_upstream_tee, q3, fluid)
                         + transition_loss_at(g, TransitionSite::DischargeToProduction, q3, fluid);
    m.at('E') = m.at('F') + dp_ef;
    const double dp_de = friction_dp(g.recirc_discharge, q3, fluid);
    const double p_d_backward = m.at('E') + dp_de;

    // Branch side, forward from the trial P_G through the pump. The pump runs
    // at fixed Q2 and delivers the loop resistance at that rate.
    const double dp_gh = friction_dp(g.recirc_suction, q2, fluid);
    const double dp_fg = g.tee_loss_coefficient * velocity_head(q2, g.tee_branch_id_m, fluid)
                         + transition_loss_at(g, TransitionSite::ProductionToSuction, q2, fluid);
    const double pump_boost = dp_de + dp_ef + dp_fg + dp_gh;

    m.at('G') = p_g_pa;
    m.at('H') = p_g_pa - dp_gh;
    const double p_d_forward = m.at('H') + pump_boost;
    m.closure_residual_pa = p_d_forward - p_d_backward;

    m.at('D') = p_d_backward;
    m.at('I') = p_d_backward;
    m.at('C') = p_d_backward;

    m.subsea_pump_dp_pa = q2 > 0.0 ? m.at('I') - m.at('H') : 0.0;
    m.motor_dp_pa = (q2 / q1) * m.subsea_pump_dp_pa / (eff.subsea_motor * eff.subsea_pump);
    m.at('B') = m.at('C') + m.motor_dp_pa;
    m.at('A') = m.at('B') - rho * units::kGravity * g.injection_line.elevation_change_m
                + friction_dp(g.injection_line, q1, fluid);
    m.deck_pump_dp_pa = m.at('A') - units::kAtmosphere;
    return m;
}

NodePressureMap solve_loop(const LoopGeometry& g, const FlowCase& flow,
                           const FluidProperties& fluid, const MachineEfficiencies& eff,
                           const LoopSolverOptions& options)
{
    g.validate();
    flow.validate();
    fluid.validate();
    eff.validate();
    if (!(options.closure_tolerance_pa > 0.0) || options.max_iterations < 1) {
        throw ValidationError("solver options: tolerance must be > 0 and max_iterations >= 1");
    }

    auto residual = [&](double p_g) {
        return evaluate_loop(g, flow, fluid, eff, p_g).closure_residual_pa;
    };

    // P_G sits below P_F, which sits below the discharge pressure at D.
    double lo = units::kAtmosphere;
    double hi = evaluate_loop(g, flow, fluid, eff, lo).at('D');
    double r_lo = residual(lo);
    if (r_lo > 0.0) {
        lo = 0.0;
        r_lo = residual(lo);
        if (r_lo > 0.0) {
            throw InfeasibleError("cavitation/infeasible: branch pressure at node G would be "
                                  "below absolute zero",
                                  'G');
        }
    }
    double r_hi = residual(hi);
    if (r_hi < 0.0) {
        throw ConvergenceError(
            fmt::format("loop closure not bracketed: residual {} Pa at upper bound", r_hi), r_hi,
            0);
    }

    int iterations = 0;
    double p_g = hi;
    double r = r_hi;
    if (std::abs(r_lo) < std::abs(r_hi)) {
        p_g = lo;
        r = r_lo;
    }
    while (std::abs(r) >= options.closure_tolerance_pa) {
        if (iterations >= options.max_iterations) {
            throw ConvergenceError(
                fmt::format("loop closure did not converge after {} iterations; last residual "
                            "{:.3f} Pa",
                            iterations, r),
                r, iterations);
        }
        ++iterations;
        p_g = 0.5 * (lo + hi);
        r = residual(p_g);
        if (r < 0.0) {
            lo = p_g;
        } else {
            hi = p_g;
        }
    }

    NodePressureMap m = evaluate_loop(g, flow, fluid, eff, p_g);
    m.converged = true;
    m.iterations = iterations;
    for (char node : kLoopNodes) {
        if (!(m.at(node) > 0.0)) {
            throw InfeasibleError(
                fmt::format("cavitation/infeasible: absolute pressure at node {} is {:.1f} Pa",
                            node, m.at(node)),
                node);
        }
    }
    return m;
}

double deck_pump_power(double dp_pa, double q1_m3h, const MachineEfficiencies& eff)
{
    if (!(dp_pa >= 0.0)) {
        throw ValidationError("deck_pump_power: dp must be >= 0");
    }
    return dp_pa * units::m3h_to_m3s(q1_m3h) / eff.deck_pump;
}

double subsea_pump_power(double dp_pa, double q2_m3h, const MachineEfficiencies& eff)
{
    if (!(dp_pa >= 0.0)) {
        throw ValidationError("subsea_pump_power: dp must be >= 0");
    }
    return dp_pa * units::m3h_to_m3s(q2_m3h) / eff.subsea_pump;
}

} // namespace subseaflush
