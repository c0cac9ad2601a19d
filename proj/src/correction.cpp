#include "tddm/correction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tddm {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDenomEps = 1e-12;
constexpr double kTanClamp = 1e-6;
}  // namespace

void SimParams::validate() const {
    if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
    if (beta < 1.0) throw std::invalid_argument("beta must be >= 1");
    if (nu < 0.0 || nu >= 0.5)
        throw std::invalid_argument("Poisson ratio must lie in [0, 0.5)");
    if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
}

InterfaceGeometry estimate_geometry(const PhaseField& f, const SimParams& params) {
    const Grid& g = *f.grid;
    InterfaceGeometry geom(g);
    const double band = params.band();
    const double inf = std::numeric_limits<double>::infinity();

    if (f.quantized) {
        // Integer-valued field (an initial condition): the contour is the
        // cell-boundary jump, half a cell away toward any differing
        // neighbor, at the level halfway across the jump.  The secant
        // stencil below cannot see it because a constant-valued cell has no
        // gradient to divide by.
        for (int j = 0; j < g.n; ++j) {
            const int jm = g.wrap(j - 1), jp = g.wrap(j + 1);
            for (int i = 0; i < g.n; ++i) {
                const int im = g.wrap(i - 1), ip = g.wrap(i + 1);
                const double u0 = f.at(i, j);
                // Nearest differing neighbor per axis, preferring the lower
                // side like the descent rule of the smooth branch.
                auto jump_to = [&](double um, double up) {
                    if (um != u0 || up != u0) return std::min(um, up) != u0
                                                          ? std::min(um, up)
                                                          : std::max(um, up);
                    return u0;
                };
                const double nx = jump_to(f.at(im, j), f.at(ip, j));
                const double ny = jump_to(f.at(i, jm), f.at(i, jp));
                if (nx == u0 && ny == u0) continue;
                const double nb = (nx != u0) ? nx : ny;
                const double level = (u0 + nb) / 2.0;
                const double d1 = (nx != u0) ? g.dx / 2.0 : inf;
                const double d2 = (ny != u0) ? g.dx / 2.0 : inf;

                double dist, alpha;
                if (std::isinf(d1)) {
                    dist = d2;
                    alpha = 0.0;
                } else if (std::isinf(d2)) {
                    dist = d1;
                    alpha = kPi / 2.0;
                } else {
                    dist = d1 * d2 / std::sqrt(d1 * d1 + d2 * d2);
                    alpha = std::atan2(d2, d1);
                }
                const std::size_t p = g.idx(i, j);
                geom.d[p] = (u0 > level) ? dist : -dist;
                geom.alpha[p] = alpha;
                geom.level[p] = level;
                geom.band_mask[p] = 1;
            }
        }
        return geom;
    }

    for (int j = 0; j < g.n; ++j) {
        const int jm = g.wrap(j - 1), jp = g.wrap(j + 1);
        for (int i = 0; i < g.n; ++i) {
            const int im = g.wrap(i - 1), ip = g.wrap(i + 1);
            const double u0 = f.at(i, j);
            // Nearest half-integer contour level.
            const double level = std::round(u0 - 0.5) + 0.5;
            const double du = u0 - level;

            // Per-axis distance against the neighbor on the side of the
            // contour: descending when the point sits above the level,
            // ascending otherwise.
            auto axis_dist = [&](double um, double up) {
                const double nb = (du >= 0.0) ? std::min(um, up) : std::max(um, up);
                const double denom = u0 - nb;
                if (std::abs(denom) < kDenomEps) return inf;
                const double v = du / denom * g.dx;
                return v >= 0.0 ? v : inf;  // neighbor on the wrong side: flat limit
            };
            const double d1 = axis_dist(f.at(im, j), f.at(ip, j));
            const double d2 = axis_dist(f.at(i, jm), f.at(i, jp));

            double dist, alpha;
            if (std::isinf(d1) && std::isinf(d2)) {
                continue;  // locally flat, no contour nearby
            } else if (std::isinf(d1)) {
                dist = d2;
                alpha = 0.0;  // u constant in x: line along x, screw
            } else if (std::isinf(d2)) {
                dist = d1;
                alpha = kPi / 2.0;  // u constant in y: line along y, edge
            } else {
                const double ss = d1 * d1 + d2 * d2;
                // Exactly on the contour both distances vanish.
                dist = ss > 0.0 ? d1 * d2 / std::sqrt(ss) : 0.0;
                alpha = std::atan2(d2, d1);
            }
            if (dist > band) continue;

            const std::size_t p = g.idx(i, j);
            geom.d[p] = (du >= 0.0) ? dist : -dist;
            geom.alpha[p] = alpha;
            geom.level[p] = level;
            geom.band_mask[p] = 1;
        }
    }
    return geom;
}

RealField2D compute_u_dis(const PhaseField& f, InterfaceGeometry& geom,
                          const SimParams& params) {
    const Grid& g = *f.grid;
    if (geom.grid->n != g.n)
        throw std::invalid_argument("compute_u_dis: grid mismatch");
    RealField2D out(g);
    const double c = 2.0 / (kPi * params.dt);
    const double aniso_c = params.nu / (1.0 - params.nu);

    // The linear extrapolation u - c*d/(1+..) is only trustworthy right next
    // to the contour, where the one-sided stencil distance is accurate;
    // farther out the profile saturates and the same formula would bend
    // u_dis away from the contour value, breaking the monotonicity of the
    // stretched field.  So: evaluate it at contour-adjacent seed points and
    // flood the seed value (and its alpha and level) over the whole grid.
    // The tan/arctan remap built on a constant-per-ray u_dis degrades
    // gracefully with distance: plateaus map back onto plateaus.
    const double seed_reach = 2.0 * g.dx;
    std::vector<std::size_t> queue;
    std::vector<std::uint8_t> filled(g.size(), 0);
    queue.reserve(g.size());
    for (std::size_t p = 0; p < g.size(); ++p) {
        if (geom.band_mask[p] && std::abs(geom.d[p]) <= seed_reach) {
            const double s = std::sin(geom.alpha[p]);
            out.values[p] = f.u[p] - c * geom.d[p] / (1.0 + aniso_c * s * s);
            filled[p] = 1;
            queue.push_back(p);
        } else {
            out.values[p] = geom.level[p];
        }
    }
    // Breadth-first flood: each point inherits from its nearest seeded
    // neighbor, approximating the value carried along the contour normal.
    // Deterministic: row-major seeds, fixed neighbor order, first writer
    // wins.  Unreached points (possible only when no seed exists) keep the
    // local level, and band_mask stays 0 there, which makes the stretch a
    // no-op.
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t p = queue[head];
        const int i = static_cast<int>(p) % g.n, j = static_cast<int>(p) / g.n;
        const std::size_t nb[4] = {g.idx(g.wrap(i - 1), j), g.idx(g.wrap(i + 1), j),
                                   g.idx(i, g.wrap(j - 1)), g.idx(i, g.wrap(j + 1))};
        for (std::size_t q : nb) {
            if (filled[q]) continue;
            out.values[q] = out.values[p];
            geom.alpha[q] = geom.alpha[p];
            geom.level[q] = geom.level[p];
            geom.band_mask[q] = 1;
            filled[q] = 1;
            queue.push_back(q);
        }
    }
    return out;
}

RealField2D stretch_correct(const PhaseField& f, const RealField2D& u_dis,
                            const InterfaceGeometry& geom, const SimParams& params) {
    const Grid& g = *f.grid;
    RealField2D out(g);
    const double aniso_c = params.nu / (1.0 - params.nu);
    const double lim = 0.5 - kTanClamp;
    for (std::size_t p = 0; p < g.size(); ++p) {
        if (!geom.band_mask[p]) {
            out.values[p] = f.u[p];
            continue;
        }
        // Work on the tan-linearized axis centred at the local level, where
        // the saturating profile is a straight line: a is the point's
        // position on that axis and b the previous contour's.  Scaling the
        // offset a - b moves the crossing to exactly beta times the basic
        // displacement; scaling tan(pi*(u - u_dis)) instead would lose a
        // factor (1 + beta*b^2) to the tangent addition formula.
        const double du = f.u[p] - geom.level[p];
        const double db = u_dis.values[p] - geom.level[p];
        // The map fixes the endpoints +-1/2 (the tan pole maps back to
        // itself), so beyond them the continuous extension is a
        // passthrough: there the profile has saturated into a plateau and
        // stretching would rewrite values far from the contour.
        if (std::abs(du) >= lim || std::abs(db) >= lim) {
            out.values[p] = f.u[p];
            continue;
        }
        const double s = std::sin(geom.alpha[p]);
        const double factor = (1.0 + aniso_c * s * s) / params.beta;
        const double a = std::tan(kPi * du);
        const double b = std::tan(kPi * db);
        out.values[p] = geom.level[p] + std::atan(b + factor * (a - b)) / kPi;
    }
    return out;
}

}  // namespace tddm
