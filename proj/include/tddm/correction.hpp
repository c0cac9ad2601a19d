#pragma once

#include <vector>

#include "tddm/field.hpp"
#include "tddm/grid.hpp"

namespace tddm {

enum class GeometryFrom { previous, current };

struct SimParams {
    double dt = 0.16;       // time step = dislocation core radius
    double beta = 1.0;      // velocity rescaling factor, >= 1
    double nu = 1.0 / 3.0;  // Poisson ratio
    double sigma_app = 0.0; // applied stress, units mu*b/l0
    int n_steps = 0;
    double band_width = 0.0;  // 0 -> default 4*dt
    GeometryFrom geometry_from = GeometryFrom::previous;

    double band() const { return band_width > 0.0 ? band_width : 4.0 * dt; }
    void validate() const;
};

// Signed distance and line-direction angle near dislocation contours,
// estimated from the pre-threshold field by the two-point stencil.
// d is signed positive on the side where u exceeds the local half-integer
// level; alpha is folded into [0, pi/2] (only sin^2 alpha is consumed).
struct InterfaceGeometry {
    const Grid* grid = nullptr;
    std::vector<double> d;
    std::vector<double> alpha;
    std::vector<char> band_mask;
    std::vector<double> level;  // nearest half-integer contour level per point

    explicit InterfaceGeometry(const Grid& g)
        : grid(&g),
          d(g.size(), 0.0),
          alpha(g.size(), 0.0),
          band_mask(g.size(), 0),
          level(g.size(), 0.5) {}
};

InterfaceGeometry estimate_geometry(const PhaseField& f_pre_threshold,
                                    const SimParams& params);

// u_dis: the pre-threshold solution value extrapolated back to the contour,
// i.e. the local level plus the slowly varying background from everything
// except the nearest dislocation.  It is evaluated at contour-adjacent seed
// points via u - (2/(pi dt)) d / (1 + nu sin^2 a / (1 - nu)) and flooded
// outward from there, carrying the seed's alpha along and extending
// band_mask over every reached point (so `geom` is completed in place).
RealField2D compute_u_dis(const PhaseField& f_pre_threshold,
                          InterfaceGeometry& geom, const SimParams& params);

// Variable-stretching remap that corrects the anisotropic mobility and
// rescales the front displacement by beta.  Identity wherever u_dis is
// undefined and, for beta = 1, nu = 0, everywhere.
RealField2D stretch_correct(const PhaseField& f_pre_threshold,
                            const RealField2D& u_dis,
                            const InterfaceGeometry& geom,
                            const SimParams& params);

}  // namespace tddm
