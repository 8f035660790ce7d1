#ifndef CSDECON_RNG_HPP
#define CSDECON_RNG_HPP

#include <cstdint>
#include <random>

namespace csdecon {

/// Seeded random source with all samplers spelled out in code, so a seed
/// pins the full stream: mt19937_64 bits, uniform doubles from the top 53
/// bits, Box-Muller normals, Marsaglia-Tsang gamma, exponential-race
/// Poisson. No std distributions are used, keeping output independent of
/// the standard library implementation.
class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1], for safe logs.
  double uniform_pos() { return 1.0 - uniform01(); }

  double sign() { return (gen_() & 1u) ? 1.0 : -1.0; }

  /// Uniform integer in [0, bound) by rejection (unbiased).
  uint64_t integer(uint64_t bound);

  /// Standard normal (Box-Muller, both values used).
  double normal();

  /// Gamma(shape, 1) via Marsaglia-Tsang, with the shape<1 boost.
  double gamma(double shape);

  /// Poisson(lambda) by counting exponential arrivals (O(lambda)).
  int64_t poisson(double lambda);

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Derives independent sub-seeds from one user seed (splitmix64 mixing).
uint64_t derive_seed(uint64_t seed, uint64_t stream);

} // namespace csdecon

#endif
