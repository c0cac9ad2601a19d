#pragma once

#include <map>
#include <memory>

#include "tddm/correction.hpp"
#include "tddm/fft.hpp"
#include "tddm/field.hpp"
#include "tddm/kernel.hpp"

namespace tddm {

// Total resolved shear stress: uniform applied part plus scenario fields.
struct StressField {
    const Grid* grid = nullptr;
    std::vector<double> sigma;

    StressField() = default;
    explicit StressField(const Grid& g, double fill = 0.0)
        : grid(&g), sigma(g.size(), fill) {}
    double at(int i, int j) const { return sigma[grid->idx(i, j)]; }
};

struct StepDiagnostics {
    int step_index = 0;
    double field_mean = 0.0;
    std::map<double, int> contour_count_by_level;
    int max_level = 0;
};

// Spectral convolution of a quantized field with the kernel multiplier.
// Preserves the field mean exactly to roundoff (multiplier(0,0) = 1).
RealField2D convolve(const PhaseField& f, const SpectralKernel& kernel);
RealField2D convolve(const PhaseField& f, const SpectralKernel& kernel, const Fft& fft);

// Nearest-integer quantization with the half-open convention: a value
// exactly at j + 0.5 maps to j.
PhaseField threshold(const RealField2D& f);

// One step of the basic scheme: threshold(K * u - sigma * dt).
std::pair<PhaseField, StepDiagnostics> step_basic(const PhaseField& f,
                                                  const SpectralKernel& kernel,
                                                  const StressField& stress,
                                                  const SimParams& params);

// One step of the corrected scheme with mobility correction and velocity
// rescaling; geometry is carried between steps.
struct CorrectedStepResult {
    PhaseField field;
    InterfaceGeometry geometry;
    StepDiagnostics diagnostics;
};
CorrectedStepResult step_corrected(const PhaseField& f, const SpectralKernel& kernel,
                                   const StressField& stress, const SimParams& params,
                                   const InterfaceGeometry& geom_prev);

// Driver owning the transform plan and the carried geometry.  Effective
// simulated time advances by beta * dt per corrected step.
class Stepper {
  public:
    Stepper(const Grid& grid, const SpectralKernel& kernel, StressField stress,
            SimParams params, PhaseField initial, bool corrected);

    const PhaseField& field() const { return field_; }
    const StepDiagnostics& diagnostics() const { return diag_; }
    int step_index() const { return step_; }
    double time() const { return step_ * params_.beta * params_.dt; }
    const SimParams& params() const { return params_; }

    void advance();

  private:
    const Grid* grid_;
    const SpectralKernel* kernel_;
    StressField stress_;
    SimParams params_;
    bool corrected_;
    Fft fft_;
    PhaseField field_;
    InterfaceGeometry geom_;
    StepDiagnostics diag_;
    int step_ = 0;
    bool bootstrapped_ = false;
};

}  // namespace tddm
