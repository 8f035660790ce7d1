#ifndef CSDECON_WAVELET_HPP
#define CSDECON_WAVELET_HPP

#include "csdecon/image.hpp"

namespace csdecon {

/// Orthonormal multi-level 2D Haar transform on a fixed grid. The analysis
/// map is the adjoint/inverse of the synthesis map Psi, so
/// dwt2_forward = Psi^t and dwt2_inverse = Psi.
///
/// Coefficients use the standard in-place multiresolution layout: after l
/// levels the top-left (h/2^l) x (w/2^l) block of the coefficient image
/// holds the approximation, with detail subbands around it; the coefficient
/// vector is that image flattened row-major.
struct WaveletOperator {
  int levels;
  Index height, width;

  WaveletOperator(Index h, Index w, int levels);
};

Vec dwt2_forward(const WaveletOperator &op, const Image &x);
Image dwt2_inverse(const WaveletOperator &op, const Vec &coeffs);

} // namespace csdecon

#endif
