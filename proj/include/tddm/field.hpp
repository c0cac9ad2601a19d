#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tddm/grid.hpp"

namespace tddm {

// Integer-valued (or, between threshold steps, real-valued) field whose
// half-integer level lines are the dislocations.
struct PhaseField {
    const Grid* grid = nullptr;
    std::vector<double> u;
    bool quantized = false;

    PhaseField() = default;
    explicit PhaseField(const Grid& g, double fill = 0.0)
        : grid(&g), u(g.size(), fill) {}

    double& at(int i, int j) { return u[grid->idx(i, j)]; }
    double at(int i, int j) const { return u[grid->idx(i, j)]; }
};

// Level curve traced on the torus.  Points are unwrapped (consecutive points
// continuous, possibly outside [-L, L]); closed means closed on the torus
// with zero net winding, i.e. a genuine loop in the plane.
struct Contour {
    double level = 0.0;
    std::vector<std::pair<double, double>> points;
    bool closed = false;
};

PhaseField init_circle(const Grid& grid, double cx, double cy, double radius,
                       int inside_value, int outside_value);
PhaseField init_half_plane(const Grid& grid, double x0, int value_right,
                           int value_left);
PhaseField init_frank_read(const Grid& grid, double x0, double y0);

// Marching squares on the periodic grid with linear edge interpolation.
// Saddles are resolved by the average-of-corners rule.
std::vector<Contour> extract_contours(const PhaseField& f, double level);

// Shoelace area of a closed contour (unwrapped coordinates).
double contour_area(const Contour& c);
std::pair<double, double> contour_centroid(const Contour& c);

void write_pgm(const PhaseField& f, const std::string& path);
void write_field_csv(const PhaseField& f, const std::string& path);

}  // namespace tddm
