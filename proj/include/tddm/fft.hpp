#pragma once

#include <complex>
#include <vector>

#include "tddm/grid.hpp"

namespace tddm {

// Normalization convention (fixed project-wide): the forward transform is
// the plain unnormalized DFT, so the zero-frequency bin equals the grid sum
// of the field; the inverse transform carries the 1/n^2 factor.  Kernel
// multipliers are dimensionless factors applied between the two, so a
// multiplier with value 1 at k=0 preserves the field mean exactly.
using Spectrum = std::vector<std::complex<double>>;

// Plan cache for a fixed grid size.  Immutable after construction apart
// from the internal scratch buffers, which make an Fft instance single
// threaded; distinct instances are independent.
class Fft {
  public:
    explicit Fft(const Grid& grid);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    Spectrum forward(const RealField2D& f) const;
    RealField2D inverse(const Spectrum& spec, const Grid& grid) const;

  private:
    int n_;
    void* plan_fwd_;
    void* plan_bwd_;
    mutable Spectrum buf_in_;
    mutable Spectrum buf_out_;
};

// One-shot convenience wrappers (cache plans per grid size internally).
Spectrum forward_transform(const RealField2D& f);
RealField2D inverse_transform(const Spectrum& spec, const Grid& grid);

}  // namespace tddm
