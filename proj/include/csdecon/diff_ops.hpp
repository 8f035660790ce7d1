#ifndef CSDECON_DIFF_OPS_HPP
#define CSDECON_DIFF_OPS_HPP

#include <array>

#include "csdecon/fft.hpp"
#include "csdecon/image.hpp"

namespace csdecon {

/// The five periodic finite-difference operators of the generalized TV
/// penalty: first differences h, v and composed second differences
/// hh = h o h, vv = v o v, hv = h o v. All are BCCB, so spatial stencils
/// and spectral application agree.
enum class DiffDir { H, V, HH, VV, HV };

struct DiffOperator {
  DiffDir dir;

  int order() const {
    return (dir == DiffDir::H || dir == DiffDir::V) ? 1 : 2;
  }
  /// 2^{1-o(d)} weight used by the generalized TV sum.
  double gtv_factor() const { return order() == 1 ? 1.0 : 0.5; }
};

inline constexpr std::array<DiffDir, 5> kAllDiffDirs = {
    DiffDir::H, DiffDir::V, DiffDir::HH, DiffDir::VV, DiffDir::HV};

Image diff_apply(const DiffOperator &d, const Image &x);
Image diff_adjoint(const DiffOperator &d, const Image &x);

/// DFT of the operator's point response; usable with Fft2(h, w).
Spectrum diff_spectrum(const DiffOperator &d, Index h, Index w);

} // namespace csdecon

#endif
