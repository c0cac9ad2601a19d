#include "tddm/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace tddm {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kBurgersMagnitude = 2.0 * kPi / 157.0;  // b ~ 0.04 on [-pi,pi]^2
}  // namespace

ScenarioName parse_scenario_name(const std::string& s) {
    if (s == "straight_edge") return ScenarioName::straight_edge;
    if (s == "shrink_loop") return ScenarioName::shrink_loop;
    if (s == "two_loops") return ScenarioName::two_loops;
    if (s == "orowan") return ScenarioName::orowan;
    if (s == "frank_read") return ScenarioName::frank_read;
    throw std::invalid_argument("unknown scenario: " + s);
}

std::string scenario_name_string(ScenarioName name) {
    switch (name) {
        case ScenarioName::straight_edge: return "straight_edge";
        case ScenarioName::shrink_loop: return "shrink_loop";
        case ScenarioName::two_loops: return "two_loops";
        case ScenarioName::orowan: return "orowan";
        case ScenarioName::frank_read: return "frank_read";
    }
    throw std::invalid_argument("unknown scenario enum value");
}

StressField particle_stress(const Grid& grid, const ParticleObstacle& p,
                            double drive_sign) {
    if (p.radius <= 0.0 || p.ramp_width <= 0.0 || p.strength <= 0.0)
        throw std::invalid_argument("particle_stress: radius, ramp, f0 must be positive");
    const double L = grid.domain_half_length;
    const double reach = p.radius + p.ramp_width;
    if (std::abs(p.cx) + reach >= L || std::abs(p.cy) + reach >= L)
        throw std::invalid_argument("particle overlaps the domain boundary");

    // Repulsion opposes the approach driven by the uniform stress, so the
    // particle's term carries the opposite sign of the drive.
    const double s = (drive_sign >= 0.0) ? -1.0 : 1.0;
    StressField out(grid);
    for (int j = 0; j < grid.n; ++j) {
        const double dy = grid.y_coords[j] - p.cy;
        for (int i = 0; i < grid.n; ++i) {
            const double dx = grid.x_coords[i] - p.cx;
            const double r = std::hypot(dx, dy);
            double f;
            if (r <= p.radius) {
                f = p.strength;
            } else if (r <= reach) {
                const double q = (reach - r) / p.ramp_width;
                f = p.strength * q * q;
            } else {
                continue;
            }
            out.sigma[grid.idx(i, j)] = s * f;
        }
    }
    return out;
}

StressField frank_read_pin_stress(const Grid& grid, const FrankReadPins& pins) {
    if (pins.y0 <= 0.0)
        throw std::invalid_argument("frank_read_pin_stress: y0 must be positive");
    if (pins.mu_b_prefactor <= 0.0)
        throw std::invalid_argument("frank_read_pin_stress: prefactor must be positive");

    StressField out(grid);
    for (int j = 0; j < grid.n; ++j) {
        const double y = grid.y_coords[j];
        const double ym = pins.y0 - y, yp = pins.y0 + y;
        for (int i = 0; i < grid.n; ++i) {
            // The 1/(x - x0) singularity on the pinned column is kept but
            // capped at a quarter-cell offset: the diverging near field is
            // exactly what holds the one-cell source segment in place
            // against the applied stress, and the cap bounds it when x0
            // falls on (or next to) a grid column.
            double a = grid.x_coords[i] - pins.x0;
            if (std::abs(a) < grid.dx / 4.0)
                a = (a < 0.0) ? -grid.dx / 4.0 : grid.dx / 4.0;
            const double a2 = a * a;
            const double t1 = ym * a / (a2 * std::sqrt(a2 + ym * ym));
            const double t2 = yp * a / (a2 * std::sqrt(a2 + yp * yp));
            // Sign: negative on the source side (x < x0), which lifts the
            // field there and holds the segment; positive just right of the
            // column, which stops the coincident jump from escaping right.
            out.sigma[grid.idx(i, j)] = pins.mu_b_prefactor * (t1 + t2);
        }
    }
    return out;
}

Scenario build_scenario(ScenarioName name, const ScenarioConfig& cfg) {
    const bool fr = (name == ScenarioName::frank_read);
    const int n = cfg.n > 0 ? cfg.n : (fr ? 2048 : 1024);
    const double L =
        cfg.domain_half_length > 0.0 ? cfg.domain_half_length : (fr ? 3.0 * kPi : kPi);

    Scenario sc;
    sc.name = name;
    sc.grid = std::make_unique<Grid>(make_grid(n, L));
    const Grid& g = *sc.grid;

    sc.params.dt = cfg.dt;
    sc.params.beta = cfg.beta;
    sc.params.nu = cfg.nu >= 0.0 ? cfg.nu : 1.0 / 3.0;
    sc.params.n_steps = cfg.n_steps;
    sc.params.geometry_from = cfg.geometry_from;
    sc.burgers = cfg.burgers;

    double sigma = cfg.sigma_app;
    const bool sigma_given = !std::isnan(sigma);

    switch (name) {
        case ScenarioName::straight_edge: {
            if (!sigma_given) sigma = 0.1;
            sc.field = init_half_plane(g, cfg.front_x0, 1, 0);
            sc.stress = StressField(g, sigma);
            break;
        }
        case ScenarioName::shrink_loop: {
            if (!sigma_given) sigma = 0.0;
            const double r = cfg.loop_radius > 0.0 ? cfg.loop_radius : 2.0 * kPi / 3.0;
            sc.field = init_circle(g, 0.0, 0.0, r, 1, 0);
            sc.stress = StressField(g, sigma);
            break;
        }
        case ScenarioName::two_loops: {
            if (!sigma_given) sigma = 0.0;
            const double r = cfg.loops_radius > 0.0 ? cfg.loops_radius : kPi / 3.0;
            const double c = r + cfg.loops_offset;
            sc.field = init_circle(g, c, 0.0, r, 1, 0);
            PhaseField left = init_circle(g, -c, 0.0, r, 1, 0);
            for (std::size_t p = 0; p < g.size(); ++p)
                sc.field.u[p] = std::max(sc.field.u[p], left.u[p]);
            sc.stress = StressField(g, sigma);
            break;
        }
        case ScenarioName::orowan: {
            if (!sigma_given) sigma = 0.1;
            ParticleObstacle p = cfg.particle;
            // The repulsive ramp must be wider than one step's contour
            // travel, or a front (or the bypass loop collapsing under line
            // tension) hops over it straight into the rim.  Budget both the
            // free-flight advance and the curvature shrinkage of a loop
            // hugging the rim.
            if (p.ramp_width <= 0.0) {
                const double drive =
                    cfg.beta * kPi * cfg.dt * cfg.dt * std::abs(sigma) / 2.0;
                const double curv = cfg.beta * cfg.dt * cfg.dt /
                                    (8.0 * p.radius) *
                                    std::log(16.0 * p.radius / cfg.dt);
                p.ramp_width = std::max(g.dx, 3.0 * (drive + curv));
            }
            // Strong enough to stall the front, but below the spontaneous
            // nucleation threshold: a region where |sigma|*dt exceeds 1/2
            // would be pushed across a new integer level every step.
            if (p.strength <= 0.0)
                p.strength = std::min(100.0 * std::abs(sigma), 0.45 / cfg.dt);
            if (p.strength <= std::abs(sigma))
                throw std::invalid_argument("orowan: f0 must exceed the driving stress");
            const double x0 =
                cfg.front_x0 != 0.0 ? cfg.front_x0 : p.cx - p.radius - 1.0;
            sc.field = init_half_plane(g, x0, 1, 0);
            sc.stress = particle_stress(g, p, sigma);
            for (double& v : sc.stress.sigma) v += sigma;
            sc.particle = p;
            break;
        }
        case ScenarioName::frank_read: {
            if (!sigma_given) sigma = -1.0;
            FrankReadPins pins = cfg.pins;
            if (pins.x0 == 0.0) pins.x0 = kPi / 3.0;
            if (pins.mu_b_prefactor <= 0.0)
                pins.mu_b_prefactor =
                    kBurgersMagnitude / (4.0 * kPi * (1.0 - sc.params.nu));
            sc.field = init_frank_read(g, pins.x0, pins.y0);
            sc.stress = frank_read_pin_stress(g, pins);
            for (double& v : sc.stress.sigma) v += sigma;
            break;
        }
    }

    sc.params.sigma_app = sigma;
    sc.params.validate();
    return sc;
}

}  // namespace tddm
