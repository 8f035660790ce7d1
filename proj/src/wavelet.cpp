#include "csdecon/wavelet.hpp"

#include <cmath>
#include <vector>

#include "csdecon/errors.hpp"

namespace csdecon {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

WaveletOperator::WaveletOperator(Index h, Index w, int levels_)
    : levels(levels_), height(h), width(w) {
  if (levels < 1)
    throw SizingError("WaveletOperator: levels must be >= 1");
  const Index div = Index(1) << levels;
  if (h < div || w < div || h % div != 0 || w % div != 0)
    throw SizingError("WaveletOperator: dimensions must be divisible by 2^levels");
}

namespace {

// One analysis pass along the rows of the hl x wl submatrix of buf.
void haar_rows_fwd(double *buf, Index stride, Index hl, Index wl,
                   std::vector<double> &tmp) {
  const Index half = wl / 2;
  for (Index r = 0; r < hl; ++r) {
    double *row = buf + r * stride;
    for (Index j = 0; j < half; ++j) {
      const double a = row[2 * j], b = row[2 * j + 1];
      tmp[j] = (a + b) * kInvSqrt2;
      tmp[half + j] = (a - b) * kInvSqrt2;
    }
    for (Index j = 0; j < wl; ++j)
      row[j] = tmp[j];
  }
}

void haar_rows_inv(double *buf, Index stride, Index hl, Index wl,
                   std::vector<double> &tmp) {
  const Index half = wl / 2;
  for (Index r = 0; r < hl; ++r) {
    double *row = buf + r * stride;
    for (Index j = 0; j < half; ++j) {
      const double a = row[j], d = row[half + j];
      tmp[2 * j] = (a + d) * kInvSqrt2;
      tmp[2 * j + 1] = (a - d) * kInvSqrt2;
    }
    for (Index j = 0; j < wl; ++j)
      row[j] = tmp[j];
  }
}

void haar_cols_fwd(double *buf, Index stride, Index hl, Index wl,
                   std::vector<double> &tmp) {
  const Index half = hl / 2;
  for (Index c = 0; c < wl; ++c) {
    for (Index i = 0; i < half; ++i) {
      const double a = buf[(2 * i) * stride + c], b = buf[(2 * i + 1) * stride + c];
      tmp[i] = (a + b) * kInvSqrt2;
      tmp[half + i] = (a - b) * kInvSqrt2;
    }
    for (Index i = 0; i < hl; ++i)
      buf[i * stride + c] = tmp[i];
  }
}

void haar_cols_inv(double *buf, Index stride, Index hl, Index wl,
                   std::vector<double> &tmp) {
  const Index half = hl / 2;
  for (Index c = 0; c < wl; ++c) {
    for (Index i = 0; i < half; ++i) {
      const double a = buf[i * stride + c], d = buf[(half + i) * stride + c];
      tmp[2 * i] = (a + d) * kInvSqrt2;
      tmp[2 * i + 1] = (a - d) * kInvSqrt2;
    }
    for (Index i = 0; i < hl; ++i)
      buf[i * stride + c] = tmp[i];
  }
}

} // namespace

Vec dwt2_forward(const WaveletOperator &op, const Image &x) {
  if (x.height != op.height || x.width != op.width)
    throw SizingError("dwt2_forward: image dimensions mismatch");
  Vec out = x.data;
  std::vector<double> tmp(static_cast<size_t>(std::max(op.height, op.width)));
  for (int l = 0; l < op.levels; ++l) {
    const Index hl = op.height >> l, wl = op.width >> l;
    haar_rows_fwd(out.data(), op.width, hl, wl, tmp);
    haar_cols_fwd(out.data(), op.width, hl, wl, tmp);
  }
  return out;
}

Image dwt2_inverse(const WaveletOperator &op, const Vec &coeffs) {
  if (coeffs.size() != op.height * op.width)
    throw SizingError("dwt2_inverse: coefficient vector has wrong length");
  Image out(op.height, op.width, coeffs);
  std::vector<double> tmp(static_cast<size_t>(std::max(op.height, op.width)));
  for (int l = op.levels - 1; l >= 0; --l) {
    const Index hl = op.height >> l, wl = op.width >> l;
    haar_cols_inv(out.data.data(), op.width, hl, wl, tmp);
    haar_rows_inv(out.data.data(), op.width, hl, wl, tmp);
  }
  return out;
}

} // namespace csdecon
