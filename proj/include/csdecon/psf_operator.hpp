#ifndef CSDECON_PSF_OPERATOR_HPP
#define CSDECON_PSF_OPERATOR_HPP

#include "csdecon/fft.hpp"
#include "csdecon/image.hpp"

namespace csdecon {

/// Spatially invariant blur H as circular (periodic) convolution on a fixed
/// grid, diagonalized by the 2D DFT. The kernel is embedded centered at the
/// origin with quadrant wrap, so a centered unit impulse gives the identity
/// operator. Immutable after construction; apply calls are pure.
class PsfOperator {
public:
  PsfOperator(const Image &kernel, Index target_h, Index target_w);

  const Image &kernel() const { return kernel_; }
  Index target_height() const { return th_; }
  Index target_width() const { return tw_; }
  const Spectrum &spectrum() const { return spectrum_; }
  const Fft2 &fft() const { return fft_; }

  /// max_k |h_hat(k)|^2, the Lipschitz constant of x -> HtHx.
  double max_spectrum_sq() const { return max_spec_sq_; }

private:
  Image kernel_;
  Index th_, tw_;
  Fft2 fft_;
  Spectrum spectrum_;
  double max_spec_sq_;
};

/// Hx via pointwise spectral multiplication.
Image convolve_circular(const PsfOperator &op, const Image &x);

/// Ht y, i.e. convolution with the conjugate spectrum.
Image convolve_adjoint(const PsfOperator &op, const Image &y);

/// Solves [beta HtH + 2 alpha I] x = rhs by spectral division.
/// Throws NumericalError if beta|h_hat|^2 + 2 alpha vanishes at any
/// frequency (impossible for alpha > 0).
Image spectral_solve_tikhonov(const PsfOperator &op, const Image &rhs,
                              double beta, double alpha);

} // namespace csdecon

#endif
