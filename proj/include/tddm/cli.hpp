#pragma once

#include <string>

#include "tddm/scenario.hpp"

namespace tddm {

// Effective run configuration: JSON file values overlaid with CLI
// overrides; unresolved fields keep scenario defaults (resolved values are
// echoed to config_effective.json at run time).
struct RunConfig {
    std::string scenario = "straight_edge";
    int n = 0;
    double domain_half_length = 0.0;
    double dt = 0.16;
    double beta = 1.0;
    double nu = -1.0;  // <0 -> scenario default (1/3)
    double sigma_app = std::numeric_limits<double>::quiet_NaN();
    double burgers_b1 = 1.0;
    double burgers_b2 = 0.0;
    int steps = 100;
    int snapshot_every = 0;  // 0 -> initial and final snapshots only
    bool correction = true;  // corrected scheme vs basic scheme
    std::string geometry_from = "previous";
    std::string out_dir = "out";

    double front_x0 = 0.0;
    double loop_radius = 0.0;
    double loops_radius = 0.0;
    double loops_offset = 0.11;
    ParticleObstacle particle;
    FrankReadPins pins;
};

RunConfig load_config(const std::string& path);

// "key=value" with dotted keys for blocks (e.g. particle.R=0.7).
void apply_override(RunConfig& cfg, const std::string& keyval);

ScenarioConfig to_scenario_config(const RunConfig& cfg);

// Number of worker threads for sweeps: TDDM_THREADS if set, else hardware
// concurrency, clamped to >= 1.
int thread_cap();

// Executes the configured run; writes CSV series, snapshots, report.txt and
// config_effective.json under cfg.out_dir.  Returns a process exit status.
int run(const RunConfig& cfg);

// Straight-edge velocity sweep over sigma x beta, compared against the
// published values; desk mode runs at n=1024 with the tolerance rescaled to
// its coarser cell-per-step quantum.
int reproduce_tables(bool full, const std::string& out_dir);

// Kernel self-checks: mean preservation, multiplier range, and the nu=0
// real-space closed form.
int validate_kernel();

}  // namespace tddm
