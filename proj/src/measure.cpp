#include "tddm/measure.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace tddm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double measure_front_position(const PhaseField& f) {
    const Grid& g = *f.grid;
    double sum = 0.0;
    for (int j = 0; j < g.n; ++j) {
        bool found = false;
        double pos = 0.0;
        for (int i = 0; i < g.n; ++i) {
            const double ua = f.at(i, j);
            const double ub = f.at(g.wrap(i + 1), j);
            if (ua <= 0.5 && ub > 0.5) {  // rising crossing
                const double frac = (0.5 - ua) / (ub - ua);
                pos = g.x_coords[i] + frac * g.dx;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("measure_front_position: no rising crossing");
        // Rows agree to within a cell for a straight front, so no per-row
        // unwrap is needed inside one snapshot.
        sum += pos;
    }
    return sum / g.n;
}

std::vector<VelocityRecord> measure_front_velocity(const std::vector<double>& positions,
                                                   double domain_half_length,
                                                   const SimParams& params) {
    const double L = domain_half_length;
    std::vector<VelocityRecord> out;
    out.reserve(positions.size());
    double unwrapped = 0.0;
    for (std::size_t s = 0; s < positions.size(); ++s) {
        if (s == 0) {
            unwrapped = positions[0];
        } else {
            // Minimal-image increment from the previous unwrapped position.
            double prev_wrapped = unwrapped;
            while (prev_wrapped >= L) prev_wrapped -= 2.0 * L;
            while (prev_wrapped < -L) prev_wrapped += 2.0 * L;
            double d = positions[s] - prev_wrapped;
            while (d > L) d -= 2.0 * L;
            while (d < -L) d += 2.0 * L;
            unwrapped += d;
        }
        VelocityRecord r;
        r.step = static_cast<int>(s);
        r.time = s * params.beta * params.dt;
        r.front_position = unwrapped;
        if (s > 0) {
            r.instantaneous_velocity =
                (unwrapped - out.back().front_position) / params.dt;
            r.running_mean_velocity = (unwrapped - out.front().front_position) /
                                      (s * params.dt);
        }
        out.push_back(r);
    }
    return out;
}

namespace {

// The loop of interest is the closed contour of largest area; thresholding
// occasionally emits a transient one-cell island next to the front, which
// must not end the measurement series.
const Contour& dominant_closed_contour(const std::vector<Contour>& cs) {
    const Contour* found = nullptr;
    double best = -1.0;
    for (const auto& c : cs) {
        if (!c.closed) continue;
        const double a = std::abs(contour_area(c));
        if (a > best) {
            best = a;
            found = &c;
        }
    }
    if (!found) throw std::runtime_error("expected a closed contour, got none");
    return *found;
}

}  // namespace

RadiusRecord measure_loop_radius(const PhaseField& f) {
    const auto contours = extract_contours(f, 0.5);
    const Contour& c = dominant_closed_contour(contours);

    RadiusRecord r;
    r.radius_area = std::sqrt(contour_area(c) / kPi);
    const auto [cx, cy] = contour_centroid(c);
    std::size_t m = c.points.size() - 1;  // closing point duplicated
    double sum = 0.0;
    for (std::size_t p = 0; p < m; ++p)
        sum += std::hypot(c.points[p].first - cx, c.points[p].second - cy);
    r.radius_mean = sum / m;
    return r;
}

AspectRatio measure_aspect_ratio(const PhaseField& f) {
    const auto contours = extract_contours(f, 0.5);
    const Contour& c = dominant_closed_contour(contours);
    const auto [cx, cy] = contour_centroid(c);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    const std::size_t m = c.points.size() - 1;
    for (std::size_t p = 0; p < m; ++p) {
        const double x = c.points[p].first - cx;
        const double y = c.points[p].second - cy;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    sxx /= m; sxy /= m; syy /= m;
    const double tr = sxx + syy;
    const double disc = std::sqrt(std::max(0.0, (sxx - syy) * (sxx - syy) + 4.0 * sxy * sxy));
    const double lmax = 0.5 * (tr + disc), lmin = 0.5 * (tr - disc);

    AspectRatio a;
    a.ratio = (lmin > 0.0) ? std::sqrt(lmax / lmin) : 1.0;
    // Major eigenvector (x, y) with (lmax - sxx) x = sxy y.
    double ex = sxy, ey = lmax - sxx;
    if (std::abs(ex) < 1e-300 && std::abs(ey) < 1e-300) {
        ex = 1.0;
        ey = 0.0;
        if (syy > sxx) std::swap(ex, ey);
    }
    a.major_axis_y = std::abs(ey) > std::abs(ex);
    return a;
}

ContourCensus count_contours(const PhaseField& f, double level, int min_points) {
    ContourCensus c;
    for (const auto& k : extract_contours(f, level)) {
        if (static_cast<int>(k.points.size()) < min_points) continue;
        (k.closed ? c.closed : c.open)++;
    }
    return c;
}

double oracle_edge_velocity(double sigma, double dt, double nu, bool corrected) {
    if (dt <= 0.0) throw std::invalid_argument("oracle_edge_velocity: dt must be positive");
    const double v = kPi * dt * sigma / 2.0;
    return corrected ? v : v / (1.0 - nu);
}

std::vector<std::pair<double, double>> oracle_loop_radius_trajectory(double R0,
                                                                     double dt,
                                                                     double t_end) {
    if (!(R0 > dt))
        throw std::invalid_argument("oracle_loop_radius_trajectory: need R0 > dt");
    auto rate = [dt](double R) { return -(dt / (8.0 * R)) * std::log(16.0 * R / dt); };

    const double h = dt / 10.0;
    std::vector<std::pair<double, double>> out;
    double t = 0.0, R = R0;
    out.emplace_back(t, R);
    while (t < t_end && R > 2.0 * dt) {
        const double k1 = rate(R);
        const double k2 = rate(R + 0.5 * h * k1);
        const double k3 = rate(R + 0.5 * h * k2);
        const double k4 = rate(R + h * k3);
        R += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
        out.emplace_back(t, R);
    }
    return out;
}

double oracle_general_velocity(double kappa, double alpha, double dt, double nu,
                               double sigma, double c0_plus_a) {
    if (!(dt > 0.0 && dt < 1.0))
        throw std::invalid_argument("oracle_general_velocity: dt must lie in (0,1)");
    const double s2 = std::sin(alpha) * std::sin(alpha);
    const double mobility = 1.0 + nu * s2 / (1.0 - nu);
    const double line_tension = (1.0 + nu * (1.0 - 3.0 * s2)) / (4.0 * kPi * (1.0 - nu));
    return (kPi * dt / 2.0) * mobility *
           (-line_tension * kappa * std::log(dt) + c0_plus_a + sigma);
}

void write_velocity_csv(const std::vector<VelocityRecord>& recs, const std::string& path) {
    std::ofstream out(path);
    out.precision(17);
    out << "step,time,front_position,instantaneous_velocity,running_mean_velocity\n";
    for (const auto& r : recs)
        out << r.step << ',' << r.time << ',' << r.front_position << ','
            << r.instantaneous_velocity << ',' << r.running_mean_velocity << '\n';
}

void write_radius_csv(const std::vector<RadiusRecord>& recs, const std::string& path) {
    std::ofstream out(path);
    out.precision(17);
    out << "step,time,radius_area,radius_mean\n";
    for (const auto& r : recs)
        out << r.step << ',' << r.time << ',' << r.radius_area << ',' << r.radius_mean
            << '\n';
}

void write_contours_csv(const std::vector<Contour>& contours, const std::string& path) {
    std::ofstream out(path);
    out.precision(17);
    out << "level,point_index,x,y,closed\n";
    for (const auto& c : contours)
        for (std::size_t p = 0; p < c.points.size(); ++p)
            out << c.level << ',' << p << ',' << c.points[p].first << ','
                << c.points[p].second << ',' << (c.closed ? 1 : 0) << '\n';
}

}  // namespace tddm
