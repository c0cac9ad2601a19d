#pragma once

#include <cstddef>
#include <vector>

namespace tddm {

// Periodic square grid on [-L, L]^2 with n points per dimension.
// Wavenumbers are stored in transform-native order (0, 1, ..., n/2-1,
// -n/2, ..., -1) scaled by pi/L, matching the unshifted DFT layout.
struct Grid {
    int n = 0;
    double domain_half_length = 0.0;
    double dx = 0.0;
    std::vector<double> x_coords;  // n entries, x_i = -L + i*dx
    std::vector<double> y_coords;
    std::vector<double> k1;        // n entries, angular wavenumbers
    std::vector<double> k2;

    std::size_t size() const { return static_cast<std::size_t>(n) * n; }
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(j) * n + i;  // row-major, j = y index
    }
    int wrap(int i) const {
        int m = i % n;
        return m < 0 ? m + n : m;
    }
};

Grid make_grid(int n, double domain_half_length);

struct RealField2D {
    const Grid* grid = nullptr;
    std::vector<double> values;

    RealField2D() = default;
    explicit RealField2D(const Grid& g, double fill = 0.0)
        : grid(&g), values(g.size(), fill) {}

    double& at(int i, int j) { return values[grid->idx(i, j)]; }
    double at(int i, int j) const { return values[grid->idx(i, j)]; }
};

}  // namespace tddm
