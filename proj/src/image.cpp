#include "csdecon/image.hpp"

#include <cmath>

#include "csdecon/errors.hpp"

namespace csdecon {

Image::Image(Index h, Index w, Vec d) : height(h), width(w), data(std::move(d)) {
  if (data.size() != h * w)
    throw SizingError("Image: data length does not equal height*width");
}

bool all_finite(const Vec &v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i]))
      return false;
  return true;
}

} // namespace csdecon
