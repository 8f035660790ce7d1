#ifndef CSDECON_FFT_HPP
#define CSDECON_FFT_HPP

#include <complex>
#include <vector>

#include "csdecon/image.hpp"

namespace csdecon {

using Cplx = std::complex<double>;
using Spectrum = std::vector<Cplx>;

/// Real 2D DFT pair (r2c / c2r) for a fixed height x width grid.
/// Spectrum layout is h x (w/2+1), row-major, matching the usual
/// half-plane storage of a real transform. Plans are created once;
/// forward/inverse are safe to call concurrently on distinct buffers.
class Fft2 {
public:
  Fft2(Index h, Index w);
  ~Fft2();
  Fft2(const Fft2 &) = delete;
  Fft2 &operator=(const Fft2 &) = delete;

  Index height() const { return h_; }
  Index width() const { return w_; }
  Index spec_size() const { return h_ * (w_ / 2 + 1); }

  /// in: h*w reals (preserved). out: spec_size() complexes.
  void forward(const double *in, Cplx *out) const;
  /// in: spec_size() complexes (clobbered). out: h*w reals, scaled by 1/(h*w).
  void inverse(Cplx *in, double *out) const;

  Spectrum forward(const Image &img) const;
  Image inverse(Spectrum spec) const;

private:
  Index h_, w_;
  void *plan_fwd_;
  void *plan_inv_;
};

/// Orthonormal 2D DCT-II and its inverse (DCT-III) on a fixed grid.
/// Forward then inverse is the identity; both preserve the 2-norm.
class Dct2 {
public:
  Dct2(Index h, Index w);
  ~Dct2();
  Dct2(const Dct2 &) = delete;
  Dct2 &operator=(const Dct2 &) = delete;

  Index height() const { return h_; }
  Index width() const { return w_; }

  void forward(const double *in, double *out) const;
  void inverse(const double *in, double *out) const;

private:
  void scale_forward(double *buf) const;
  void scale_inverse(double *in_copy) const;

  Index h_, w_;
  void *plan_fwd_;
  void *plan_inv_;
};

} // namespace csdecon

#endif
