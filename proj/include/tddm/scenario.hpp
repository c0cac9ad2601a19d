#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "tddm/correction.hpp"
#include "tddm/field.hpp"
#include "tddm/kernel.hpp"
#include "tddm/stepper.hpp"

namespace tddm {

// Impenetrable circular precipitate exerting a short-range repulsive stress:
// f0 inside the rim, a quadratic ramp of width ramp_width outside it, zero
// beyond.
struct ParticleObstacle {
    double cx = 0.0, cy = 0.0;
    double radius = 0.7;
    double ramp_width = 0.0;  // 0 -> max(grid cell, 3x one step's contour travel)
    double strength = 0.0;    // f0; 0 -> min(100x |drive|, 0.45/dt)
};

// Pinning points of a Frank-Read source at (x0, +-y0).
struct FrankReadPins {
    double x0 = 0.0;
    double y0 = 1.0;
    // Dimensionless value of mu*b/(4*pi*(1-nu)); 0 -> computed from
    // b = 2*pi/157 and the run's Poisson ratio.
    double mu_b_prefactor = 0.0;
};

enum class ScenarioName { straight_edge, shrink_loop, two_loops, orowan, frank_read };

ScenarioName parse_scenario_name(const std::string& s);
std::string scenario_name_string(ScenarioName name);

// Knobs shared by all scenarios; zero/negative sentinel values mean
// "use the scenario's default".
struct ScenarioConfig {
    int n = 0;                        // 0 -> 1024 (frank_read: 2048)
    double domain_half_length = 0.0;  // 0 -> pi (frank_read: 3*pi)
    double dt = 0.16;
    double beta = 1.0;
    double nu = -1.0;                 // <0 -> 1/3
    double sigma_app = std::numeric_limits<double>::quiet_NaN();  // NaN -> default
    BurgersSpec burgers{1.0, 0.0};
    GeometryFrom geometry_from = GeometryFrom::previous;
    int n_steps = 0;

    double front_x0 = 0.0;            // straight_edge / orowan initial front
    double loop_radius = 0.0;         // shrink_loop; 0 -> 2*pi/3
    double loops_radius = 0.0;        // two_loops; 0 -> pi/3
    double loops_offset = 0.11;       // centers at +-(loops_radius + offset, 0)
    ParticleObstacle particle;        // orowan
    FrankReadPins pins;               // frank_read
};

// Fully assembled initial state.  The grid is heap-held so the referencing
// fields stay valid when the Scenario itself moves.
struct Scenario {
    ScenarioName name;
    std::unique_ptr<Grid> grid;
    PhaseField field;
    StressField stress;
    SimParams params;
    BurgersSpec burgers;
    std::optional<ParticleObstacle> particle;  // resolved values (orowan only)
};

// Piecewise repulsive stress of the particle, signed to oppose the uniform
// drive so a contour driven into the particle stalls at the rim.
StressField particle_stress(const Grid& grid, const ParticleObstacle& p,
                            double drive_sign);

// Stress of the opposite-sign segment coincident with the pinned column at
// x = x0: it cancels that segment's long-range field and its near field
// holds the one-cell source segment in place against the applied stress.
// The 1/(x - x0) singularity is capped at a quarter-cell offset.
StressField frank_read_pin_stress(const Grid& grid, const FrankReadPins& pins);

Scenario build_scenario(ScenarioName name, const ScenarioConfig& cfg);

}  // namespace tddm
