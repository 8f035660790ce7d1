#ifndef CSDECON_IMAGE_HPP
#define CSDECON_IMAGE_HPP

#include <Eigen/Core>

namespace csdecon {

/// Flat real-valued vector type used for measurements, coefficients and
/// lexicographically ordered images.
using Vec = Eigen::ArrayXd;
using Index = Eigen::Index;

/// Dense 2D real-valued image, row-major storage. vec(Image) is the
/// lexicographic ordering used throughout, so `data` doubles as the
/// flattened view.
struct Image {
  Index height = 0;
  Index width = 0;
  Vec data;

  Image() = default;
  Image(Index h, Index w) : height(h), width(w), data(Vec::Zero(h * w)) {}
  Image(Index h, Index w, Vec d);

  double &at(Index r, Index c) { return data[r * width + c]; }
  double at(Index r, Index c) const { return data[r * width + c]; }

  Index size() const { return height * width; }
  bool same_shape(const Image &o) const {
    return height == o.height && width == o.width;
  }
};

bool all_finite(const Vec &v);

} // namespace csdecon

#endif
