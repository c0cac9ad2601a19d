#pragma once

#include <string>
#include <vector>

#include "tddm/correction.hpp"
#include "tddm/field.hpp"

namespace tddm {

struct VelocityRecord {
    int step = 0;
    double time = 0.0;  // step * beta * dt (effective simulated time)
    double front_position = 0.0;
    double instantaneous_velocity = 0.0;  // displacement per raw dt
    double running_mean_velocity = 0.0;
};

struct RadiusRecord {
    int step = 0;
    double time = 0.0;
    double radius_area = 0.0;  // sqrt(A/pi), the primary estimator
    double radius_mean = 0.0;  // mean point distance from the centroid
};

// y-averaged x-location of the rising 0->1 crossing of the 0.5 level,
// sub-cell by linear interpolation.  Throws if any row lacks a crossing.
double measure_front_position(const PhaseField& f);

// Velocities from a front-position history sampled once per step, with
// periodic unwrapping.  Velocities are reported as displacement per raw
// time step, matching how the tabulated values quantize to whole grid
// cells per step; `time` advances by beta*dt per step.
std::vector<VelocityRecord> measure_front_velocity(const std::vector<double>& positions,
                                                   double domain_half_length,
                                                   const SimParams& params);

// Radius of the largest-area closed 0.5-level contour (transient one-cell
// islands are ignored); throws if no closed contour exists.
RadiusRecord measure_loop_radius(const PhaseField& f);

// Principal-axis aspect ratio of the largest closed 0.5-level contour, from
// second moments of the traced points about the centroid.
struct AspectRatio {
    double ratio = 1.0;  // >= 1
    bool major_axis_y = false;
};
AspectRatio measure_aspect_ratio(const PhaseField& f);

// Number of closed and open contours at the given level.  Contours traced
// with fewer than min_points vertices are ignored, which filters the
// transient sub-resolution islands the thresholding can emit.
struct ContourCensus {
    int closed = 0;
    int open = 0;
};
ContourCensus count_contours(const PhaseField& f, double level, int min_points = 0);

// Straight-dislocation velocity: pi*dt*sigma/2 when the mobility correction
// is active, pi*dt*sigma/(2*(1-nu)) for the basic scheme.
double oracle_edge_velocity(double sigma, double dt, double nu, bool corrected);

// Shrinking-loop trajectory dR/dtau = -(dt/(8R)) * log(16R/dt), integrated
// with classical RK4 at step <= dt/10 from R0 until R <= 2*dt or t_end.
std::vector<std::pair<double, double>> oracle_loop_radius_trajectory(double R0,
                                                                     double dt,
                                                                     double t_end);

// General curved-dislocation velocity with the curvature-independent
// constants lumped into c0_plus_a:
// v = (pi*dt/2) * (1 + nu sin^2(a)/(1-nu)) *
//     ( -(1 + nu (1 - 3 sin^2(a)))/(4 pi (1-nu)) * kappa * log(dt)
//       + c0_plus_a + sigma )
double oracle_general_velocity(double kappa, double alpha, double dt, double nu,
                               double sigma, double c0_plus_a);

void write_velocity_csv(const std::vector<VelocityRecord>& recs, const std::string& path);
void write_radius_csv(const std::vector<RadiusRecord>& recs, const std::string& path);
void write_contours_csv(const std::vector<Contour>& contours, const std::string& path);

}  // namespace tddm
