#include "csdecon/rng.hpp"

#include <cmath>

#include "csdecon/errors.hpp"

namespace csdecon {

uint64_t Rng::integer(uint64_t bound) {
  if (bound == 0)
    throw SizingError("Rng::integer: bound must be positive");
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return v % bound;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_pos();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

double Rng::gamma(double shape) {
  if (shape <= 0.0)
    throw SizingError("Rng::gamma: shape must be positive");
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a+1) * U^{1/a}
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform_pos(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_pos();
    if (u < 1.0 - 0.0331 * x * x * x * x)
      return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v;
  }
}

int64_t Rng::poisson(double lambda) {
  if (lambda < 0.0)
    throw SizingError("Rng::poisson: lambda must be nonnegative");
  // Count arrivals of a unit-rate process before time lambda; stays in log
  // space so large lambda does not underflow.
  int64_t count = 0;
  double t = 0.0;
  for (;;) {
    t += -std::log(uniform_pos());
    if (t > lambda)
      return count;
    ++count;
  }
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace csdecon
