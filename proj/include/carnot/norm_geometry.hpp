#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "carnot/field.hpp"
#include "carnot/group.hpp"
#include "carnot/norm_core.hpp"

namespace carnot {

/// N(p) = (|x|^4 + a|z|^2)^{1/4}.
double norm_N(const CarnotGroup& g, const Point& p);

/// Closed-form horizontal gradient
///   X_i N = N^{-3} (|x|^2 x_i + (a/4) (W x)_i),  W = sum_k z_k L^(k).
/// Throws OriginSingular at the origin.
Eigen::VectorXd grad_N_closed(const CarnotGroup& g, const Point& p);

/// |grad N|^2 = N^{-6} (|x|^6 + (a^2/16) |W x|^2), evaluated as the direct
/// sum rather than by squaring the gradient vector.
double grad_N_sq(const CarnotGroup& g, const Point& p);

/// Closed-form sub-Laplacian of N, the three grouped terms:
///   -3 N^{-7} (|x|^6 + (a^2/16)|W x|^2)
///   + (n+2) |x|^2 N^{-3}
///   + (a/8) N^{-3} sum_k |L^(k) x|^2.
double laplacian_N_closed(const CarnotGroup& g, const Point& p);

/// (x/|x|) . grad N - |x|^3 / N^3; identically zero in exact arithmetic.
/// Throws ZeroHorizontal when |x| = 0.
double radial_identity_residual(const CarnotGroup& g, const Point& p);

struct NormGeometryReport {
  double a_hat = 0.0;  // inf of |grad N|^2 N^2 / |x|^2
  double c_hat = 0.0;  // sup of the same ratio
  double b_hat = 0.0;  // sup of |lap N| N^3 / |x|^2
  long sample_count = 0;
  std::uint64_t seed = 0;
  Point b_argmax;                      // maximizing point for b_hat
  bool laplacian_nonnegative = false;  // empirical, not asserted
  double radius_min = 0.0;
  double radius_max = 0.0;
};

/// Ratio extrema over points sampled log-uniformly in N over radius_range
/// with random directions; points with |x|/N < 1e-8 are excluded.
NormGeometryReport estimate_lemma2_constants(
    const CarnotGroup& g, long sample_count, std::uint64_t seed,
    std::pair<double, double> radius_range = {0.1, 10.0});

/// N as a ScalarField carrying its closed-form gradient and sub-Laplacian.
ScalarField norm_field(const CarnotGroup& g);

/// phi(N) with gradient phi'(N) grad N; phi must be a generic callable.
template <typename Phi>
ScalarField radial_field(const CarnotGroup& g, std::string name, Phi phi,
                         std::function<double(double)> phi_d1) {
  const double a = g.a();
  ScalarField f = ScalarField::from_generic(
      std::move(name), [a, phi](auto x, auto z) { return phi(homogeneous_norm(a, x, z)); });
  f.with_gradient([g, phi_d1](const Point& p) -> Eigen::VectorXd {
    const double nv = norm_N(g, p);
    if (nv == 0.0) return Eigen::VectorXd::Zero(g.n());
    return phi_d1(nv) * grad_N_closed(g, p);
  });
  return f;
}

}  // namespace carnot
