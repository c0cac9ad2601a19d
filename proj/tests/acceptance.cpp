// End-to-end acceptance suite: ten checks, one PASS/FAIL line each.
//
// Default is desk scale (n=1024 where a scale choice exists) and finishes in
// a few minutes.  Set TDDM_ACCEPT_FULL=1 to run the production-scale
// (n=2048) velocity checks instead.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tddm/fft.hpp"
#include "tddm/kernel.hpp"
#include "tddm/measure.hpp"
#include "tddm/scenario.hpp"
#include "tddm/stepper.hpp"

using namespace tddm;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int index, const std::string& what, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << index << "] " << what;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

// Mean front velocity (displacement per raw dt) over the first `steps` steps
// of a fresh straight-edge run.  The window is kept short so the two
// periodic fronts stay far apart: their tail attraction grows as they
// approach, and only the early free-flight velocity is what the published
// sweep quantizes.
double edge_mean_velocity(int n, double sigma, double beta, bool corrected,
                          int steps) {
    ScenarioConfig cfg;
    cfg.n = n;
    cfg.sigma_app = sigma;
    cfg.beta = beta;
    Scenario sc = build_scenario(ScenarioName::straight_edge, cfg);
    SpectralKernel kernel =
        build_kernel_general_burgers(*sc.grid, sc.params.nu, sc.params.dt, sc.burgers);
    Stepper st(*sc.grid, kernel, sc.stress, sc.params, sc.field, corrected);
    std::vector<double> pos{measure_front_position(st.field())};
    for (int s = 0; s < steps; ++s) {
        st.advance();
        pos.push_back(measure_front_position(st.field()));
    }
    auto recs = measure_front_velocity(pos, sc.grid->domain_half_length, sc.params);
    return recs.back().running_mean_velocity;
}

// Early measurement window.  Long windows are corrupted by the attraction
// of the two periodic fronts (amplified by the velocity rescaling); very
// short ones, on the coarse grid, by the cell-quantization phase
// oscillation of the threshold.  On the fine grid the first two steps are
// clean free flight; the coarse grid needs a few steps to average the
// phase.
int edge_window(int n) { return n >= 2048 ? 2 : 5; }

struct LoopRun {
    double max_dev = 0.0;    // vs the shrinkage ODE, over R in [0.4 R0, R0]
    bool vanished = false;
    double max_aspect_y = 0.0;  // largest aspect ratio seen with major axis y
    double max_aspect_x = 0.0;  // largest aspect ratio seen with major axis x
};

LoopRun run_shrink_loop(int n, double L, double nu, double beta, int max_steps,
                        bool stop_after_window) {
    ScenarioConfig cfg;
    cfg.n = n;
    cfg.domain_half_length = L;
    cfg.nu = nu;
    cfg.beta = beta;
    Scenario sc = build_scenario(ScenarioName::shrink_loop, cfg);
    SpectralKernel kernel =
        build_kernel_general_burgers(*sc.grid, sc.params.nu, sc.params.dt, sc.burgers);
    Stepper st(*sc.grid, kernel, sc.stress, sc.params, sc.field, true);

    const double dt = sc.params.dt;
    const double R0 = measure_loop_radius(st.field()).radius_area;
    const auto oracle =
        oracle_loop_radius_trajectory(R0, dt, max_steps * beta * dt);

    LoopRun out;
    for (int s = 1; s <= max_steps; ++s) {
        st.advance();
        RadiusRecord r;
        try {
            r = measure_loop_radius(st.field());
        } catch (const std::runtime_error&) {
            out.vanished = true;  // no closed contour left
            break;
        }
        if (nu == 0.0 && r.radius_area >= 0.4 * R0) {
            const double time = s * beta * dt;
            const std::size_t k = std::min<std::size_t>(
                static_cast<std::size_t>(time / (dt / 10.0)), oracle.size() - 1);
            const double ref = oracle[k].second;
            out.max_dev = std::max(out.max_dev, std::abs(r.radius_area - ref) / ref);
        }
        AspectRatio a = measure_aspect_ratio(st.field());
        if (a.major_axis_y)
            out.max_aspect_y = std::max(out.max_aspect_y, a.ratio);
        else
            out.max_aspect_x = std::max(out.max_aspect_x, a.ratio);
        if (stop_after_window && r.radius_area < 0.35 * R0) break;
    }
    return out;
}

}  // namespace

int main() {
    const bool full = [] {
        const char* e = std::getenv("TDDM_ACCEPT_FULL");
        return e && std::string(e) != "0";
    }();
    std::cout << "acceptance suite, scale: " << (full ? "full (n=2048)" : "desk (n=1024)")
              << std::endl;
    const auto t0 = std::chrono::steady_clock::now();

    // [1] Convolution preserves the mean of random integer fields, n=512.
    {
        Grid g = make_grid(512, kPi);
        std::mt19937 rng(20240816);
        std::uniform_int_distribution<int> dist(-2, 2);
        double worst = 0.0;
        for (double nu : {0.0, 1.0 / 3.0}) {
            SpectralKernel k = build_kernel(g, nu, 0.16);
            PhaseField f(g);
            for (auto& v : f.u) v = dist(rng);
            RealField2D c = convolve(f, k);
            double m0 = 0.0, m1 = 0.0;
            for (std::size_t p = 0; p < g.size(); ++p) {
                m0 += f.u[p];
                m1 += c.values[p];
            }
            worst = std::max(worst, std::abs(m1 - m0) / g.size());
        }
        report(1, "convolution preserves the field mean (n=512)", worst < 1e-12,
               "max drift " + fmt(worst));
    }

    // [2] Spectral kernel for nu=0 matches the closed-form real-space kernel
    // within 5% relative sup-norm on r <= L/2.
    {
        const int n = 512;
        const double L = kPi, t = 0.16;
        Grid g = make_grid(n, L);
        SpectralKernel k = build_kernel(g, 0.0, t);
        Spectrum spec(g.size());
        for (std::size_t p = 0; p < g.size(); ++p) spec[p] = k.multiplier[p];
        RealField2D kr = inverse_transform(spec, g);
        const double cell = g.dx * g.dx;
        double max_diff = 0.0, max_ref = 0.0;
        for (int j = 0; j < n; ++j) {
            const double y = (j < n / 2) ? j * g.dx : j * g.dx - 2.0 * L;
            for (int i = 0; i < n; ++i) {
                const double x = (i < n / 2) ? i * g.dx : i * g.dx - 2.0 * L;
                if (x * x + y * y > (L / 2) * (L / 2)) continue;
                const double ref = real_space_kernel_nu0(x, y, t);
                max_diff = std::max(max_diff, std::abs(kr.values[g.idx(i, j)] / cell - ref));
                max_ref = std::max(max_ref, std::abs(ref));
            }
        }
        const double rel = max_diff / max_ref;
        report(2, "nu=0 kernel matches the closed form on r<=L/2", rel < 0.05,
               "rel sup error " + fmt(rel));
    }

    // [3] Straight-edge velocity sweep row sigma=0.1: measured mean within
    // one grid cell per step of the published values.
    {
        const int n = full ? 2048 : 1024;
        const double dt = 0.16, sigma = 0.1;
        const double tol = (2.0 * kPi / n) / dt;
        const double betas[3] = {1.0, 4.0, 10.0};
        const double published[3] = {0.0197, 0.0959, 0.2493};
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 3; ++i) {
            const double v =
                edge_mean_velocity(n, sigma, betas[i], true, edge_window(n));
            ok = ok && std::abs(v - published[i]) <= tol;
            if (i) detail += ", ";
            detail += "b=" + fmt(betas[i]) + ": " + fmt(v) + " vs " + fmt(published[i]);
        }
        report(3, "velocity sweep row sigma=0.1 within one cell/step", ok,
               detail + ", tol " + fmt(tol));
    }

    // [4] Mobility correction efficacy at sigma=0.1, beta=10, n=2048: the
    // corrected scheme hits the isotropic velocity target; the basic scheme
    // stays within its anisotropic prediction; and per unit effective time
    // the corrected run is strictly closer to the isotropic target.
    {
        const int n = 2048;
        const double dt = 0.16, sigma = 0.1, beta = 10.0;
        const double v_iso = kPi * dt * sigma / 2.0;           // per effective dt
        const double v_aniso = v_iso / (1.0 - 1.0 / 3.0);      // basic prediction
        const double vc = edge_mean_velocity(n, sigma, beta, true, edge_window(n));
        const double vb = edge_mean_velocity(n, sigma, 1.0, false, 12);
        const double ratio_c = vc / (beta * v_iso);
        const double ratio_b = vb / v_aniso;
        const bool ok = ratio_c > 0.9 && ratio_c < 1.1 && ratio_b > 0.8 &&
                        ratio_b < 1.2 &&
                        std::abs(vc / (beta * v_iso) - 1.0) <
                            std::abs(vb / v_iso - 1.0);
        report(4, "mobility correction efficacy (sigma=0.1, beta=10, n=2048)", ok,
               "corrected/target " + fmt(ratio_c) + ", basic/prediction " +
                   fmt(ratio_b));
    }

    // [5] Shrinking loop, nu=0, R0=2pi/3, n=1024: radius history within 5%
    // of the shrinkage ODE for R in [0.4 R0, R0]; the loop vanishes.
    // Domain 1.4375*pi: large enough that the loop's periodic images do not
    // slow it measurably, small enough that the grid still resolves it.
    {
        const double L = 1.4375 * kPi;
        LoopRun b4 = run_shrink_loop(1024, L, 0.0, 4.0, 120, false);
        LoopRun b1 = run_shrink_loop(1024, L, 0.0, 1.0, 400, false);
        const bool ok = b1.max_dev < 0.05 && b4.max_dev < 0.05 && b1.vanished &&
                        b4.vanished;
        report(5, "loop shrinkage matches the rate ODE within 5% and vanishes", ok,
               "max dev b=1: " + fmt(b1.max_dev) + ", b=4: " + fmt(b4.max_dev) +
                   ", vanished: " + (b1.vanished ? "yes" : "no") + "/" +
                   (b4.vanished ? "yes" : "no"));
    }

    // [6] Anisotropic (nu=1/3) loop grows an aspect ratio > 1.05 with the
    // major axis along y before it vanishes.
    {
        LoopRun r = run_shrink_loop(1024, kPi, 1.0 / 3.0, 4.0, 200, false);
        const bool ok = r.max_aspect_y > 1.05 && r.vanished;
        report(6, "nu=1/3 loop elongates along y before vanishing", ok,
               "max aspect with major axis y: " + fmt(r.max_aspect_y) +
                   ", with major axis x: " + fmt(r.max_aspect_x) +
                   ", vanished: " + (r.vanished ? "yes" : "no"));
    }

    // [7] Two-loop topology: a close pair merges (2 -> 1 -> 0); a separated
    // pair annihilates independently (2 -> 0, never 1).
    {
        auto census_path = [](double offset, int steps) {
            ScenarioConfig cfg;
            cfg.n = 1024;
            cfg.loops_offset = offset;
            Scenario sc = build_scenario(ScenarioName::two_loops, cfg);
            SpectralKernel kernel = build_kernel_general_burgers(
                *sc.grid, sc.params.nu, sc.params.dt, sc.burgers);
            Stepper st(*sc.grid, kernel, sc.stress, sc.params, sc.field, true);
            std::vector<int> path{count_contours(st.field(), 0.5, 8).closed};
            for (int s = 0; s < steps && path.back() > 0; ++s) {
                st.advance();
                const int c = count_contours(st.field(), 0.5, 8).closed;
                if (c != path.back()) path.push_back(c);
            }
            return path;
        };
        const std::vector<int> close = census_path(0.11, 250);
        const std::vector<int> apart = census_path(0.8, 250);
        const bool close_ok = close == std::vector<int>{2, 1, 0};
        const bool apart_ok = apart == std::vector<int>{2, 0};
        auto show = [](const std::vector<int>& v) {
            std::string s;
            for (int x : v) s += (s.empty() ? "" : ">") + std::to_string(x);
            return s;
        };
        report(7, "two-loop topology: close pair 2>1>0, separated pair 2>0",
               close_ok && apart_ok,
               "close " + show(close) + ", separated " + show(apart));
    }

    // [8] Orowan bypass: the front passes the particle leaving a closed loop
    // around it, and no contour point ever enters the particle.
    {
        ScenarioConfig cfg;
        cfg.n = 1024;
        cfg.beta = 4.0;
        Scenario sc = build_scenario(ScenarioName::orowan, cfg);
        SpectralKernel kernel = build_kernel_general_burgers(
            *sc.grid, sc.params.nu, sc.params.dt, sc.burgers);
        Stepper st(*sc.grid, kernel, sc.stress, sc.params, sc.field, true);
        const double L = sc.grid->domain_half_length;
        const ParticleObstacle p = *sc.particle;
        bool breached = false;
        auto contour_stats = [&](bool* enclosing, double* front_max) {
            *enclosing = false;
            *front_max = -1e300;
            for (const auto& c : extract_contours(st.field(), 0.5)) {
                for (const auto& [x, y] : c.points) {
                    double dx = x - p.cx, dy = y - p.cy;
                    dx -= std::round(dx / (2.0 * L)) * 2.0 * L;
                    dy -= std::round(dy / (2.0 * L)) * 2.0 * L;
                    if (std::hypot(dx, dy) < p.radius) breached = true;
                }
                if (!c.closed) continue;
                // Ray cast for the particle center.
                bool inside = false;
                const std::size_t m = c.points.size();
                for (std::size_t a = 0, b = m - 2; a + 1 < m; b = a++) {
                    const auto& [xa, ya] = c.points[a];
                    const auto& [xb, yb] = c.points[b];
                    if ((ya > p.cy) != (yb > p.cy) &&
                        p.cx < (xb - xa) * (p.cy - ya) / (yb - ya) + xa)
                        inside = !inside;
                }
                if (inside) *enclosing = true;
            }
            // Front progress: x-position of the rightmost 0.5 crossing along
            // the row through the particle center is fragile near the loop,
            // so track the mean front over the top rows instead.
            double sum = 0.0;
            int cnt = 0;
            const Grid& g = *sc.grid;
            const int jrow = g.n - 8;
            for (int i = 0; i < g.n; ++i) {
                const double ua = st.field().at(i, jrow);
                const double ub = st.field().at(g.wrap(i + 1), jrow);
                if (ua <= 0.5 && ub > 0.5) {
                    sum += g.x_coords[i];
                    ++cnt;
                }
            }
            *front_max = cnt ? sum / cnt : -1e300;
        };
        bool enclosing = false;
        double front = 0.0;
        for (int s = 0; s < 300; ++s) {
            st.advance();
            bool enc;
            double fr;
            contour_stats(&enc, &fr);
            enclosing = enc;
            front = fr;
            if (enc && fr > p.cx + p.radius + 0.5) break;
        }
        const bool ok = enclosing && !breached && front > p.cx + p.radius;
        report(8, "Orowan bypass: loop left around the particle, rim untouched", ok,
               std::string("enclosing ") + (enclosing ? "yes" : "no") +
                   ", breached " + (breached ? "yes" : "no") + ", front at " +
                   fmt(front));
    }

    // [9] Pinned-segment source: the field reaches level >= 2 (a second
    // generation of slip) and the closed-loop count increases at least once.
    {
        ScenarioConfig cfg;  // scenario defaults: n=2048, L=3*pi
        Scenario sc = build_scenario(ScenarioName::frank_read, cfg);
        SpectralKernel kernel = build_kernel_general_burgers(
            *sc.grid, sc.params.nu, sc.params.dt, sc.burgers);
        Stepper st(*sc.grid, kernel, sc.stress, sc.params, sc.field, true);
        int max_level = 0;
        int prev_closed = count_contours(st.field(), 0.5, 8).closed;
        bool closed_increased = false;
        for (int s = 0; s < 220; ++s) {
            st.advance();
            max_level = std::max(max_level, st.diagnostics().max_level);
            const int c = count_contours(st.field(), 0.5, 8).closed;
            if (c > prev_closed) closed_increased = true;
            prev_closed = c;
            if (max_level >= 2 && closed_increased) break;
        }
        report(9, "pinned source emits loops: level >= 2 and loop count grows",
               max_level >= 2 && closed_increased,
               "max level " + std::to_string(max_level) + ", count increased: " +
                   (closed_increased ? "yes" : "no"));
    }

    // [10] Correction identity at beta=1, nu=0, and threshold boundary cases.
    {
        Grid g = make_grid(256, kPi);
        SimParams p;
        p.beta = 1.0;
        p.nu = 0.0;
        PhaseField init = init_circle(g, 0.0, 0.0, 1.5, 1, 0);
        SpectralKernel k = build_kernel(g, 0.0, p.dt);
        RealField2D conv = convolve(init, k);
        PhaseField pre(g);
        pre.u = conv.values;
        InterfaceGeometry geom = estimate_geometry(pre, p);
        RealField2D udis = compute_u_dis(pre, geom, p);
        RealField2D out = stretch_correct(pre, udis, geom, p);
        double worst = 0.0;
        for (std::size_t q = 0; q < g.size(); ++q)
            if (geom.band_mask[q])
                worst = std::max(worst, std::abs(out.values[q] - pre.u[q]));

        RealField2D tf(g);
        tf.values.assign(g.size(), 0.5);
        tf.values[1] = 0.5 + 1e-9;
        tf.values[2] = -0.5;
        tf.values[3] = 1.5;
        PhaseField th = threshold(tf);
        const bool thr_ok = th.u[0] == 0.0 && th.u[1] == 1.0 && th.u[2] == -1.0 &&
                            th.u[3] == 1.0;
        report(10, "beta=1, nu=0 stretch is the identity; threshold boundaries",
               worst < 1e-12 && thr_ok,
               "max in-band deviation " + fmt(worst) + ", boundary cases " +
                   (thr_ok ? "exact" : "WRONG"));
    }

    const auto t1 = std::chrono::steady_clock::now();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
              << " (" << g_failures << " failed), total "
              << std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count()
              << " s" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
