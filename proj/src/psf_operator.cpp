#include "csdecon/psf_operator.hpp"

#include <algorithm>
#include <cmath>

#include "csdecon/errors.hpp"

namespace csdecon {

PsfOperator::PsfOperator(const Image &kernel, Index target_h, Index target_w)
    : kernel_(kernel), th_(target_h), tw_(target_w), fft_(target_h, target_w) {
  if (kernel.height < 1 || kernel.width < 1)
    throw SizingError("PsfOperator: empty kernel");
  if (kernel.height > target_h || kernel.width > target_w)
    throw SizingError("PsfOperator: kernel larger than target image");

  // Embed the kernel with its center at the origin, wrapping the four
  // quadrants, so phase is zero for symmetric kernels.
  Image big(target_h, target_w);
  const Index cr = kernel.height / 2, cc = kernel.width / 2;
  for (Index r = 0; r < kernel.height; ++r) {
    const Index rr = ((r - cr) % target_h + target_h) % target_h;
    for (Index c = 0; c < kernel.width; ++c) {
      const Index cc2 = ((c - cc) % target_w + target_w) % target_w;
      big.at(rr, cc2) = kernel.at(r, c);
    }
  }
  spectrum_ = fft_.forward(big);
  max_spec_sq_ = 0.0;
  for (const Cplx &v : spectrum_)
    max_spec_sq_ = std::max(max_spec_sq_, std::norm(v));
}

namespace {

Image apply_spectral(const PsfOperator &op, const Image &x, bool conjugate) {
  if (x.height != op.target_height() || x.width != op.target_width())
    throw SizingError("convolve: image dimensions do not match operator");
  Spectrum s = op.fft().forward(x);
  const Spectrum &h = op.spectrum();
  for (size_t i = 0; i < s.size(); ++i)
    s[i] *= conjugate ? std::conj(h[i]) : h[i];
  return op.fft().inverse(std::move(s));
}

} // namespace

Image convolve_circular(const PsfOperator &op, const Image &x) {
  return apply_spectral(op, x, false);
}

Image convolve_adjoint(const PsfOperator &op, const Image &y) {
  return apply_spectral(op, y, true);
}

Image spectral_solve_tikhonov(const PsfOperator &op, const Image &rhs,
                              double beta, double alpha) {
  if (beta <= 0.0)
    throw SizingError("spectral_solve_tikhonov: beta must be positive");
  if (alpha < 0.0)
    throw SizingError("spectral_solve_tikhonov: alpha must be nonnegative");
  if (rhs.height != op.target_height() || rhs.width != op.target_width())
    throw SizingError("spectral_solve_tikhonov: rhs dimensions mismatch");
  Spectrum s = op.fft().forward(rhs);
  const Spectrum &h = op.spectrum();
  for (size_t i = 0; i < s.size(); ++i) {
    const double denom = beta * std::norm(h[i]) + 2.0 * alpha;
    if (denom == 0.0)
      throw NumericalError("spectral_solve_tikhonov",
                           "singular spectrum at frequency bin " +
                               std::to_string(i));
    s[i] /= denom;
  }
  return op.fft().inverse(std::move(s));
}

} // namespace csdecon
