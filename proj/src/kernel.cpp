#include "tddm/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace tddm {

namespace {

void check_args(double nu, double t) {
    if (nu < 0.0 || nu >= 0.5)
        throw std::invalid_argument("Poisson ratio must lie in [0, 0.5)");
    if (t <= 0.0)
        throw std::invalid_argument("kernel core parameter t must be positive");
}

// exponent_coeffs: kernel exponent is -(t/2) * (cxx*k1^2 + cxy*k1*k2 + cyy*k2^2) / |k|
SpectralKernel build(const Grid& grid, double nu, double t,
                     double cxx, double cxy, double cyy) {
    SpectralKernel k;
    k.grid = &grid;
    k.nu = nu;
    k.t = t;
    k.multiplier.resize(grid.size());
    for (int j = 0; j < grid.n; ++j) {
        const double k2 = grid.k2[j];
        for (int i = 0; i < grid.n; ++i) {
            const double k1 = grid.k1[i];
            const double knorm = std::sqrt(k1 * k1 + k2 * k2);
            double m;
            if (knorm == 0.0) {
                m = 1.0;  // each exponent term is bounded by |k|, limit is 0
            } else {
                const double expo =
                    -(t / 2.0) * (cxx * k1 * k1 + cxy * k1 * k2 + cyy * k2 * k2) / knorm;
                m = std::exp(expo);
            }
            k.multiplier[grid.idx(i, j)] = m;
        }
    }
    return k;
}

}  // namespace

SpectralKernel build_kernel(const Grid& grid, double nu, double t) {
    check_args(nu, t);
    return build(grid, nu, t, 1.0 / (1.0 - nu), 0.0, 1.0);
}

SpectralKernel build_kernel_general_burgers(const Grid& grid, double nu, double t,
                                            const BurgersSpec& b) {
    check_args(nu, t);
    const double norm = b.b1 * b.b1 + b.b2 * b.b2;
    if (std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("Burgers components must be unit normalized");
    if (b.b2 == 0.0 && b.b1 > 0.0)
        return build_kernel(grid, nu, t);  // bit-for-bit identical path
    const double cxx = b.b1 * b.b1 / (1.0 - nu) + b.b2 * b.b2;
    const double cxy = 2.0 * b.b1 * b.b2 * nu / (1.0 - nu);
    const double cyy = b.b1 * b.b1 + b.b2 * b.b2 / (1.0 - nu);
    return build(grid, nu, t, cxx, cxy, cyy);
}

double real_space_kernel_nu0(double x, double y, double t) {
    const double pi = 3.14159265358979323846;
    const double h = t / 2.0;
    const double r2 = h * h + x * x + y * y;
    return (1.0 / (2.0 * pi)) * h / (r2 * std::sqrt(r2));
}

}  // namespace tddm
