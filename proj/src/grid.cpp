#include "tddm/grid.hpp"

#include <stdexcept>

namespace tddm {

Grid make_grid(int n, double domain_half_length) {
    if (n < 16 || n % 2 != 0)
        throw std::invalid_argument("grid size must be even and >= 16");
    if (domain_half_length <= 0.0)
        throw std::invalid_argument("domain half-length must be positive");

    Grid g;
    g.n = n;
    g.domain_half_length = domain_half_length;
    g.dx = 2.0 * domain_half_length / n;
    g.x_coords.resize(n);
    g.y_coords.resize(n);
    g.k1.resize(n);
    g.k2.resize(n);

    const double pi = 3.14159265358979323846;
    const double dk = pi / domain_half_length;
    for (int i = 0; i < n; ++i) {
        g.x_coords[i] = -domain_half_length + i * g.dx;
        g.y_coords[i] = g.x_coords[i];
        int m = (i < n / 2) ? i : i - n;  // transform-native frequency order
        g.k1[i] = dk * m;
        g.k2[i] = g.k1[i];
    }
    return g;
}

}  // namespace tddm
