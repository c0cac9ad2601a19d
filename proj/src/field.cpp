#include "tddm/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

namespace tddm {

PhaseField init_circle(const Grid& grid, double cx, double cy, double radius,
                       int inside_value, int outside_value) {
    if (radius <= grid.dx)
        throw std::invalid_argument("circle radius below grid resolution");
    const double L = grid.domain_half_length;
    if (std::abs(cx) + radius >= L || std::abs(cy) + radius >= L)
        throw std::invalid_argument("circle not contained in the domain");

    PhaseField f(grid, outside_value);
    const double r2 = radius * radius;
    for (int j = 0; j < grid.n; ++j) {
        const double dy = grid.y_coords[j] - cy;
        for (int i = 0; i < grid.n; ++i) {
            const double dx = grid.x_coords[i] - cx;
            if (dx * dx + dy * dy < r2) f.at(i, j) = inside_value;
        }
    }
    f.quantized = true;
    return f;
}

PhaseField init_half_plane(const Grid& grid, double x0, int value_right,
                           int value_left) {
    if (std::abs(x0) >= grid.domain_half_length)
        throw std::invalid_argument("half-plane position outside domain");
    PhaseField f(grid);
    for (int j = 0; j < grid.n; ++j)
        for (int i = 0; i < grid.n; ++i)
            f.at(i, j) = grid.x_coords[i] > x0 ? value_right : value_left;
    f.quantized = true;
    return f;
}

PhaseField init_frank_read(const Grid& grid, double x0, double y0) {
    const double L = grid.domain_half_length;
    if (y0 < grid.dx)
        throw std::invalid_argument("frank-read segment shorter than one cell");
    if (x0 - grid.dx <= -L || x0 >= L || y0 >= L)
        throw std::invalid_argument("frank-read rectangle outside domain");
    PhaseField f(grid);
    // One column of ones: a cell-wide rectangle whose bounding contour
    // edges sit half a cell to either side, the right one nearest x0.
    const int ic = grid.wrap(static_cast<int>(
        std::lround((x0 - grid.dx / 2.0 + L) / grid.dx)));
    const double half = grid.dx * 1e-9;  // tolerate roundoff at the rectangle edge
    for (int j = 0; j < grid.n; ++j) {
        if (std::abs(grid.y_coords[j]) > y0 + half) continue;
        f.at(ic, j) = 1.0;
    }
    f.quantized = true;
    return f;
}

namespace {

// Canonical edge key: orientation (0 = horizontal, between (i,j)-(i+1,j);
// 1 = vertical, between (i,j)-(i,j+1)), both indices wrapped.
struct EdgeKey {
    std::uint8_t orient;
    int i, j;
    bool operator<(const EdgeKey& o) const {
        if (orient != o.orient) return orient < o.orient;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
    bool operator==(const EdgeKey& o) const {
        return orient == o.orient && i == o.i && j == o.j;
    }
};

struct EdgePoint {
    double x, y;  // in [-L, -L + 2L + dx), not yet unwrapped
};

// A corner with u <= level counts as below, matching the threshold
// convention that a value exactly on the level maps downward.
bool above(double u, double level) { return u > level; }

EdgePoint edge_point(const Grid& g, const EdgeKey& e, const PhaseField& f,
                     double level) {
    const double ua = f.at(e.i, e.j);
    double ub;
    double x = g.x_coords[e.i];
    double y = g.y_coords[e.j];
    if (e.orient == 0) {
        ub = f.at(g.wrap(e.i + 1), e.j);
        double frac = (level - ua) / (ub - ua);
        frac = std::clamp(frac, 0.0, 1.0);
        x += g.dx * frac;
    } else {
        ub = f.at(e.i, g.wrap(e.j + 1));
        double frac = (level - ua) / (ub - ua);
        frac = std::clamp(frac, 0.0, 1.0);
        y += g.dx * frac;
    }
    return {x, y};
}

}  // namespace

std::vector<Contour> extract_contours(const PhaseField& f, double level) {
    const Grid& g = *f.grid;
    const int n = g.n;

    // Each crossed edge connects to at most two neighbors (one per adjacent
    // cell); store the pairing produced by every cell.
    std::map<EdgeKey, std::vector<EdgeKey>> links;
    auto link = [&](const EdgeKey& a, const EdgeKey& b) {
        links[a].push_back(b);
        links[b].push_back(a);
    };

    for (int j = 0; j < n; ++j) {
        const int jp = g.wrap(j + 1);
        for (int i = 0; i < n; ++i) {
            const int ip = g.wrap(i + 1);
            const double ua = f.at(i, j), ub = f.at(ip, j);
            const double uc = f.at(ip, jp), ud = f.at(i, jp);
            int code = (above(ua, level) ? 1 : 0) | (above(ub, level) ? 2 : 0) |
                       (above(uc, level) ? 4 : 0) | (above(ud, level) ? 8 : 0);
            if (code == 0 || code == 15) continue;

            const EdgeKey bottom{0, i, j}, top{0, i, jp};
            const EdgeKey left{1, i, j}, right{1, ip, j};
            switch (code) {
                case 1: case 14: link(bottom, left); break;
                case 2: case 13: link(bottom, right); break;
                case 4: case 11: link(right, top); break;
                case 8: case 7:  link(top, left); break;
                case 3: case 12: link(left, right); break;
                case 6: case 9:  link(bottom, top); break;
                case 5: case 10: {
                    const bool center_above =
                        above(0.25 * (ua + ub + uc + ud), level);
                    // Connect so the above-region stays on a consistent side.
                    if ((code == 5) == center_above) {
                        link(bottom, right);
                        link(top, left);
                    } else {
                        link(bottom, left);
                        link(right, top);
                    }
                    break;
                }
                default: break;
            }
        }
    }

    const double L = g.domain_half_length;
    std::vector<Contour> out;
    std::map<EdgeKey, bool> visited;

    auto unwrap = [&](double prev, double cur) {
        while (cur - prev > L) cur -= 2.0 * L;
        while (cur - prev < -L) cur += 2.0 * L;
        return cur;
    };

    for (const auto& [start, nbrs] : links) {
        if (visited[start]) continue;

        // Walk forward from `start`; if the trace dead-ends, walk the other
        // direction and prepend.
        std::vector<EdgeKey> chain{start};
        visited[start] = true;
        bool loop = false;
        for (int pass = 0; pass < 2 && !loop; ++pass) {
            while (true) {
                const EdgeKey& cur = chain.back();
                const auto& cand = links[cur];
                EdgeKey next{};
                bool found = false;
                for (const auto& c : cand) {
                    if (c == start && chain.size() > 2) {
                        loop = true;
                        break;
                    }
                    if (!visited[c]) {
                        next = c;
                        found = true;
                        break;
                    }
                }
                if (loop || !found) break;
                visited[next] = true;
                chain.push_back(next);
            }
            if (!loop && pass == 0) std::reverse(chain.begin(), chain.end());
        }

        Contour c;
        c.level = level;
        c.points.reserve(chain.size() + 1);
        for (const auto& e : chain) {
            EdgePoint p = edge_point(g, e, f, level);
            if (!c.points.empty()) {
                p.x = unwrap(c.points.back().first, p.x);
                p.y = unwrap(c.points.back().second, p.y);
            }
            c.points.emplace_back(p.x, p.y);
        }
        if (loop && c.points.size() >= 3) {
            // Continue the unwrap back to the starting point; a net shift of
            // a full period means the curve winds around the torus rather
            // than bounding a region.
            const double fx = unwrap(c.points.back().first, c.points.front().first);
            const double fy = unwrap(c.points.back().second, c.points.front().second);
            if (std::abs(fx - c.points.front().first) < L / 2 &&
                std::abs(fy - c.points.front().second) < L / 2) {
                c.closed = true;
                c.points.emplace_back(fx, fy);
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

double contour_area(const Contour& c) {
    if (!c.closed || c.points.size() < 4) return 0.0;
    double a = 0.0;
    for (std::size_t p = 0; p + 1 < c.points.size(); ++p) {
        const auto& [x0, y0] = c.points[p];
        const auto& [x1, y1] = c.points[p + 1];
        a += x0 * y1 - x1 * y0;
    }
    return 0.5 * std::abs(a);
}

std::pair<double, double> contour_centroid(const Contour& c) {
    double sx = 0.0, sy = 0.0;
    std::size_t m = c.points.size();
    if (c.closed && m > 1) --m;  // skip duplicated closing point
    if (m == 0) return {0.0, 0.0};
    for (std::size_t p = 0; p < m; ++p) {
        sx += c.points[p].first;
        sy += c.points[p].second;
    }
    return {sx / m, sy / m};
}

void write_pgm(const PhaseField& f, const std::string& path) {
    const Grid& g = *f.grid;
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (double v : f.u) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = (hi > lo) ? hi - lo : 1.0;

    std::ofstream meta(path + ".txt");
    meta << "min " << lo << "\nmax " << hi << "\n";

    std::ofstream out(path, std::ios::binary);
    out << "P5\n" << g.n << " " << g.n << "\n255\n";
    std::vector<unsigned char> row(g.n);
    for (int j = g.n - 1; j >= 0; --j) {  // top row first
        for (int i = 0; i < g.n; ++i)
            row[i] = static_cast<unsigned char>(
                std::lround(255.0 * (f.at(i, j) - lo) / span));
        out.write(reinterpret_cast<const char*>(row.data()), g.n);
    }
}

void write_field_csv(const PhaseField& f, const std::string& path) {
    std::ofstream out(path);
    out.precision(17);
    for (int j = 0; j < f.grid->n; ++j) {
        for (int i = 0; i < f.grid->n; ++i) {
            if (i) out << ',';
            out << f.at(i, j);
        }
        out << '\n';
    }
}

}  // namespace tddm
