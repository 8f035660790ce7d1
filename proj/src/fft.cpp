#include "csdecon/fft.hpp"

#include <cmath>
#include <mutex>

#include <fftw3.h>

#include "csdecon/errors.hpp"

namespace csdecon {

namespace {
// FFTW plan creation/destruction is not thread-safe; executions are.
std::mutex &plan_mutex() {
  static std::mutex m;
  return m;
}
} // namespace

Fft2::Fft2(Index h, Index w) : h_(h), w_(w) {
  if (h < 1 || w < 1)
    throw SizingError("Fft2: dimensions must be positive");
  std::vector<double> real(static_cast<size_t>(h * w));
  std::vector<Cplx> cplx(static_cast<size_t>(spec_size()));
  std::lock_guard lock(plan_mutex());
  plan_fwd_ = fftw_plan_dft_r2c_2d(
      static_cast<int>(h), static_cast<int>(w), real.data(),
      reinterpret_cast<fftw_complex *>(cplx.data()),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_inv_ = fftw_plan_dft_c2r_2d(
      static_cast<int>(h), static_cast<int>(w),
      reinterpret_cast<fftw_complex *>(cplx.data()), real.data(),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Fft2::~Fft2() {
  std::lock_guard lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void Fft2::forward(const double *in, Cplx *out) const {
  // r2c leaves its input untouched; FFTW's signature just isn't const.
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_fwd_),
                       const_cast<double *>(in),
                       reinterpret_cast<fftw_complex *>(out));
}

void Fft2::inverse(Cplx *in, double *out) const {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_inv_),
                       reinterpret_cast<fftw_complex *>(in), out);
  const double scale = 1.0 / static_cast<double>(h_ * w_);
  const Index n = h_ * w_;
  for (Index i = 0; i < n; ++i)
    out[i] *= scale;
}

Spectrum Fft2::forward(const Image &img) const {
  Spectrum out(static_cast<size_t>(spec_size()));
  forward(img.data.data(), out.data());
  return out;
}

Image Fft2::inverse(Spectrum spec) const {
  Image out(h_, w_);
  inverse(spec.data(), out.data.data());
  return out;
}

Dct2::Dct2(Index h, Index w) : h_(h), w_(w) {
  if (h < 1 || w < 1)
    throw SizingError("Dct2: dimensions must be positive");
  std::vector<double> a(static_cast<size_t>(h * w)), b(a.size());
  std::lock_guard lock(plan_mutex());
  plan_fwd_ = fftw_plan_r2r_2d(static_cast<int>(h), static_cast<int>(w),
                               a.data(), b.data(), FFTW_REDFT10, FFTW_REDFT10,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_inv_ = fftw_plan_r2r_2d(static_cast<int>(h), static_cast<int>(w),
                               a.data(), b.data(), FFTW_REDFT01, FFTW_REDFT01,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Dct2::~Dct2() {
  std::lock_guard lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void Dct2::scale_forward(double *buf) const {
  // FFTW's REDFT10 output is 4x the unnormalized cosine sums; fold in the
  // orthonormal DCT-II scaling per dimension.
  const double r0 = 0.5 * std::sqrt(1.0 / static_cast<double>(h_));
  const double rk = 0.5 * std::sqrt(2.0 / static_cast<double>(h_));
  const double c0 = 0.5 * std::sqrt(1.0 / static_cast<double>(w_));
  const double ck = 0.5 * std::sqrt(2.0 / static_cast<double>(w_));
  for (Index r = 0; r < h_; ++r) {
    const double fr = (r == 0) ? r0 : rk;
    for (Index c = 0; c < w_; ++c)
      buf[r * w_ + c] *= fr * ((c == 0) ? c0 : ck);
  }
}

void Dct2::scale_inverse(double *in_copy) const {
  const double r0 = std::sqrt(1.0 / static_cast<double>(h_));
  const double rk = std::sqrt(2.0 / static_cast<double>(h_)) * 0.5;
  const double c0 = std::sqrt(1.0 / static_cast<double>(w_));
  const double ck = std::sqrt(2.0 / static_cast<double>(w_)) * 0.5;
  for (Index r = 0; r < h_; ++r) {
    const double fr = (r == 0) ? r0 : rk;
    for (Index c = 0; c < w_; ++c)
      in_copy[r * w_ + c] *= fr * ((c == 0) ? c0 : ck);
  }
}

void Dct2::forward(const double *in, double *out) const {
  fftw_execute_r2r(static_cast<fftw_plan>(plan_fwd_),
                   const_cast<double *>(in), out);
  scale_forward(out);
}

void Dct2::inverse(const double *in, double *out) const {
  std::vector<double> tmp(in, in + h_ * w_);
  scale_inverse(tmp.data());
  fftw_execute_r2r(static_cast<fftw_plan>(plan_inv_), tmp.data(), out);
}

} // namespace csdecon
