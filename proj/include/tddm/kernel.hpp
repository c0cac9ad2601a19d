#pragma once

#include <vector>

#include "tddm/grid.hpp"

namespace tddm {

// In-plane Burgers direction, unit normalized.
struct BurgersSpec {
    double b1 = 1.0;
    double b2 = 0.0;
};

// Fourier-space multiplier of the dislocation stress kernel.  Values lie in
// (0, 1] with exactly 1 at the zero frequency, so convolution preserves the
// field mean under the transform convention documented in fft.hpp.
struct SpectralKernel {
    const Grid* grid = nullptr;
    double nu = 0.0;
    double t = 0.0;
    std::vector<double> multiplier;  // n*n, same layout as Spectrum
};

SpectralKernel build_kernel(const Grid& grid, double nu, double t);

// General in-plane Burgers vector (b1, b2); reduces exactly to build_kernel
// for (1, 0).
SpectralKernel build_kernel_general_burgers(const Grid& grid, double nu, double t,
                                            const BurgersSpec& b);

// Closed-form real-space kernel for nu = 0, normalized to unit plane
// integral: (1/(2*pi)) * (t/2) / ((t/2)^2 + x^2 + y^2)^(3/2).
double real_space_kernel_nu0(double x, double y, double t);

}  // namespace tddm
