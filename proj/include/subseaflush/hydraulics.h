#pragma once

// Steady-state hydraulics of the recirculation flushing loop.
//
// Node layout (all pressures absolute, Pa):
//
//   A  deck pump discharge            (Q1)
//   B  injection line at seabed, motor inlet
//   C  motor outlet, merges into D
//   D  recirculation pump discharge   (Q3 = Q1 + Q2)
//   E  upstream of 2-in -> 7-in transition
//   F  upstream of the tee; Q1 returns to surface, Q2 enters the branch
//   G  branch inlet, downstream of 7-in -> 2-in transition (Q2)
//   H  recirculation pump suction
//   I  recirculation pump discharge (= D)
//   J  return flow at seabed          (Q1)
//   K  surface, atmospheric
//
// The subsea pump is driven by a motor on the injection stream. Pressure
// consumed across the motor is (Q2/Q1) * (P_I - P_H) / (eta_motor * eta_pump).

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace subseaflush {

struct FluidProperties {
    std::string name = "MEG";
    double density_kg_m3 = 1110.0;
    double dynamic_viscosity_pa_s = 0.016;

    void validate() const;
};

struct ConduitSegment {
    std::string label;
    double internal_diameter_m = 0.0;
    double length_m = 0.0;
    double roughness_m = 0.0;
    // Positive when the outlet lies below the inlet.
    double elevation_change_m = 0.0;

    void validate() const;
};

enum class TransitionSite {
    DischargeToProduction, // at E, carries Q3
    ProductionToSuction,   // at G, carries Q2
};

struct DiameterTransition {
    TransitionSite site = TransitionSite::DischargeToProduction;
    double from_id_m = 0.0;
    double to_id_m = 0.0;
};

struct LoopGeometry {
    double water_depth_m = 2000.0;
    ConduitSegment injection_line;          // A -> B
    ConduitSegment recirc_discharge;        // D -> E
    ConduitSegment production_upstream_tee; // E -> F
    ConduitSegment production_downstream_tee; // F -> J
    ConduitSegment recirc_suction;          // G -> H
    std::vector<DiameterTransition> transitions;
    // Bore of the line carrying Q1 back to surface at J.
    double return_line_id_m = 0.0;
    // Tee branch loss, applied on the branch-leg velocity head at F.
    double tee_loss_coefficient = 1.0;
    double tee_branch_id_m = 0.0;

    void validate() const;
};

// The reference layout: 2-in recirculation line (5 m after the pump, 10 m
// after the tee), 7-in production line (10 m before, 20 m after the tee),
// injection line running the full water depth.
struct ReferenceLoopParams {
    double water_depth_m = 2000.0;
    double injection_id_in = 1.5;
    double recirc_id_in = 2.0;
    double production_id_in = 7.0;
    double return_id_in = 7.0;
    double recirc_discharge_length_m = 5.0;
    double recirc_suction_length_m = 10.0;
    double production_upstream_length_m = 10.0;
    double production_downstream_length_m = 20.0;
    double roughness_m = 4.5e-5;
    double tee_loss_coefficient = 1.0;
    bool include_transitions = true;
};

LoopGeometry make_reference_loop(const ReferenceLoopParams& params);

struct FlowCase {
    double q1_injection_m3h = 0.0;
    double q2_recirculation_m3h = 0.0;

    double q3_total_m3h() const { return q1_injection_m3h + q2_recirculation_m3h; }
    void validate() const;
};

struct MachineEfficiencies {
    double deck_pump = 1.0;
    double subsea_pump = 1.0;
    double subsea_motor = 1.0;

    void validate() const;
};

inline constexpr std::array<char, 11> kLoopNodes = {'A', 'B', 'C', 'D', 'E', 'F',
                                                    'G', 'H', 'I', 'J', 'K'};

struct NodePressureMap {
    std::array<double, 11> pressure_pa{};
    double deck_pump_dp_pa = 0.0;
    double subsea_pump_dp_pa = 0.0;
    double motor_dp_pa = 0.0;
    double closure_residual_pa = 0.0;
    bool converged = false;
    int iterations = 0;

    double at(char node) const;
    double& at(char node);
};

struct LoopSolverOptions {
    double closure_tolerance_pa = 100.0;
    int max_iterations = 200;
};

// q in m3/h, id in m.
double mean_velocity(double q_m3h, double id_m);

double reynolds_number(double q_m3h, double id_m, const FluidProperties& fluid);

// Darcy friction factor: 64/Re below 2300, Swamee-Jain from 4000, and a
// linear blend between the two end values in the transition band.
double darcy_friction_factor(double reynolds, double relative_roughness);

double friction_dp(const ConduitSegment& segment, double q_m3h, const FluidProperties& fluid);

// Local loss for a sudden change of bore, on the small-pipe velocity head.
double transition_dp(double q_m3h, double from_id_m, double to_id_m, const FluidProperties& fluid);

// Marches the loop for a trial P_G and returns all node pressures together
// with the branch closure residual. Does not check feasibility.
NodePressureMap evaluate_loop(const LoopGeometry& geometry, const FlowCase& flow,
                              const FluidProperties& fluid, const MachineEfficiencies& eff,
                              double p_g_pa);

// Finds P_G by bisection on the closure residual.
// Throws ConvergenceError or InfeasibleError.
NodePressureMap solve_loop(const LoopGeometry& geometry, const FlowCase& flow,
                           const FluidProperties& fluid, const MachineEfficiencies& eff,
                           const LoopSolverOptions& options = {});

double deck_pump_power(double dp_pa, double q1_m3h, const MachineEfficiencies& eff);
double subsea_pump_power(double dp_pa, double q2_m3h, const MachineEfficiencies& eff);

} // namespace subseaflush
