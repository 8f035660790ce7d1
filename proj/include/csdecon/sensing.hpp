#ifndef CSDECON_SENSING_HPP
#define CSDECON_SENSING_HPP

#include <cstdint>
#include <vector>

#include "csdecon/fft.hpp"
#include "csdecon/image.hpp"

namespace csdecon {

/// Structurally random sensing operator Phi = R_m o T o D_s:
/// a random +-1 diagonal, an orthonormal fast transform (the 2D orthonormal
/// DCT of the vectorized image reshaped to its native height x width), and
/// selection of m rows drawn uniformly without replacement. Rows are
/// orthonormal, so Phi Phi^t = I_m exactly. Deterministic per seed.
class SensingOperator {
public:
  SensingOperator(Index height, Index width, Index m, uint64_t seed);

  Index n() const { return n_; }
  Index m() const { return m_; }
  uint64_t seed() const { return seed_; }
  Index height() const { return h_; }
  Index width() const { return w_; }
  const Vec &sign_flips() const { return signs_; }
  const std::vector<Index> &row_subset() const { return rows_; }

private:
  Index h_, w_, n_, m_;
  uint64_t seed_;
  Vec signs_;
  std::vector<Index> rows_;
  Dct2 dct_;

  friend Vec srm_apply(const SensingOperator &, const Vec &);
  friend Vec srm_adjoint(const SensingOperator &, const Vec &);
};

/// y = Phi x: sign-flip, orthonormal DCT, subsample. x has length n.
Vec srm_apply(const SensingOperator &op, const Vec &x);

/// Phi^t y: zero-fill, inverse DCT, sign-flip. y has length m.
Vec srm_adjoint(const SensingOperator &op, const Vec &y);

} // namespace csdecon

#endif
