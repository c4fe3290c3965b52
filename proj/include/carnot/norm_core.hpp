#pragma once

#include <span>

#include "carnot/dual.hpp"

namespace carnot {

/// N = (|x|^4 + a |z|^2)^{1/4}, generic over the scalar type so the same
/// kernel serves plain evaluation and dual-number differentiation.
template <typename S>
S homogeneous_norm(double a, std::span<const S> x, std::span<const S> z) {
  S x2{};
  for (const auto& xi : x) x2 = x2 + xi * xi;
  S z2{};
  for (const auto& zj : z) z2 = z2 + zj * zj;
  return pow(x2 * x2 + a * z2, 0.25);
}

inline double homogeneous_norm(double a, std::span<const double> x,
                               std::span<const double> z) {
  return homogeneous_norm<double>(a, x, z);
}

}  // namespace carnot
