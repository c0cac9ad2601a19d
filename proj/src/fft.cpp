#include "tddm/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tddm {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(const Grid& grid) : n_(grid.n) {
    const std::size_t sz = grid.size();
    buf_in_.resize(sz);
    buf_out_.resize(sz);
    auto* in = reinterpret_cast<fftw_complex*>(buf_in_.data());
    auto* out = reinterpret_cast<fftw_complex*>(buf_out_.data());
    // FFTW_ESTIMATE keeps the plan deterministic run to run.
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_fwd_ = fftw_plan_dft_2d(grid.n, grid.n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_2d(grid.n, grid.n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

Spectrum Fft::forward(const RealField2D& f) const {
    if (f.grid->n != n_)
        throw std::invalid_argument("forward_transform: grid mismatch");
    const std::size_t sz = static_cast<std::size_t>(n_) * n_;
    for (std::size_t p = 0; p < sz; ++p) buf_in_[p] = f.values[p];
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_),
                     reinterpret_cast<fftw_complex*>(buf_in_.data()),
                     reinterpret_cast<fftw_complex*>(buf_out_.data()));
    return buf_out_;
}

RealField2D Fft::inverse(const Spectrum& spec, const Grid& grid) const {
    if (grid.n != n_ || spec.size() != grid.size())
        throw std::invalid_argument("inverse_transform: shape mismatch");
    const std::size_t sz = grid.size();
    for (std::size_t p = 0; p < sz; ++p) buf_in_[p] = spec[p];
    fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_),
                     reinterpret_cast<fftw_complex*>(buf_in_.data()),
                     reinterpret_cast<fftw_complex*>(buf_out_.data()));

    RealField2D out(grid);
    const double scale = 1.0 / static_cast<double>(sz);
    double max_re = 0.0, max_im = 0.0;
    for (std::size_t p = 0; p < sz; ++p) {
        const double re = buf_out_[p].real() * scale;
        out.values[p] = re;
        max_re = std::max(max_re, std::abs(re));
        max_im = std::max(max_im, std::abs(buf_out_[p].imag()) * scale);
    }
    // Hermitian-symmetric input must invert to a real field; anything above
    // this is a corrupted spectrum, not roundoff.
    if (max_re > 0.0 && max_im > 1e-10 * max_re)
        throw std::runtime_error("inverse_transform: non-negligible imaginary residue");
    return out;
}

namespace {
Fft& cached_fft(const Grid& grid) {
    thread_local std::map<int, std::unique_ptr<Fft>> cache;
    auto it = cache.find(grid.n);
    if (it == cache.end())
        it = cache.emplace(grid.n, std::make_unique<Fft>(grid)).first;
    return *it->second;
}
}  // namespace

Spectrum forward_transform(const RealField2D& f) {
    return cached_fft(*f.grid).forward(f);
}

RealField2D inverse_transform(const Spectrum& spec, const Grid& grid) {
    return cached_fft(grid).inverse(spec, grid);
}

}  // namespace tddm
