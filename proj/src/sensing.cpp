#include "csdecon/sensing.hpp"

#include <numeric>

#include "csdecon/errors.hpp"
#include "csdecon/rng.hpp"

namespace csdecon {

SensingOperator::SensingOperator(Index height, Index width, Index m,
                                 uint64_t seed)
    : h_(height), w_(width), n_(height * width), m_(m), seed_(seed),
      dct_(height, width) {
  if (m < 1 || m > n_)
    throw SizingError("SensingOperator: need 1 <= m <= n");
  Rng rng(seed);
  signs_ = Vec(n_);
  for (Index i = 0; i < n_; ++i)
    signs_[i] = rng.sign();
  // Partial Fisher-Yates: first m entries are a uniform sample without
  // replacement.
  std::vector<Index> perm(static_cast<size_t>(n_));
  std::iota(perm.begin(), perm.end(), Index(0));
  for (Index i = 0; i < m; ++i) {
    const Index j = i + static_cast<Index>(rng.integer(static_cast<uint64_t>(n_ - i)));
    std::swap(perm[i], perm[j]);
  }
  rows_.assign(perm.begin(), perm.begin() + m);
}

Vec srm_apply(const SensingOperator &op, const Vec &x) {
  if (x.size() != op.n_)
    throw SizingError("srm_apply: input length mismatch");
  Vec flipped = x * op.signs_;
  Vec t(op.n_);
  op.dct_.forward(flipped.data(), t.data());
  Vec y(op.m_);
  for (Index i = 0; i < op.m_; ++i)
    y[i] = t[op.rows_[static_cast<size_t>(i)]];
  return y;
}

Vec srm_adjoint(const SensingOperator &op, const Vec &y) {
  if (y.size() != op.m_)
    throw SizingError("srm_adjoint: input length mismatch");
  Vec t = Vec::Zero(op.n_);
  for (Index i = 0; i < op.m_; ++i)
    t[op.rows_[static_cast<size_t>(i)]] = y[i];
  Vec x(op.n_);
  op.dct_.inverse(t.data(), x.data());
  return x * op.signs_;
}

} // namespace csdecon
