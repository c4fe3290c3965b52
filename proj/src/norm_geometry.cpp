#include "carnot/norm_geometry.hpp"

#include <cmath>

namespace carnot {

namespace {

constexpr double kHorizontalCut = 1e-8;  // |x|/N below this is excluded

// W x with W = sum_k z_k L^(k).
Eigen::VectorXd twist(const CarnotGroup& g, const Point& p) {
  Eigen::VectorXd y = Eigen::VectorXd::Zero(g.n());
  for (int k = 0; k < g.m(); ++k) y += p.z(k) * (g.lambda(k) * p.x);
  return y;
}

void require_nonzero(const CarnotGroup& g, const Point& p) {
  if (norm_N(g, p) == 0.0) throw OriginSingular("norm derivatives undefined at the origin");
}

}  // namespace

double norm_N(const CarnotGroup& g, const Point& p) {
  return homogeneous_norm(g.a(),
                          std::span<const double>(p.x.data(), p.x.size()),
                          std::span<const double>(p.z.data(), p.z.size()));
}

Eigen::VectorXd grad_N_closed(const CarnotGroup& g, const Point& p) {
  require_nonzero(g, p);
  const double nv = norm_N(g, p);
  const double x2 = p.x.squaredNorm();
  return std::pow(nv, -3.0) * (x2 * p.x + 0.25 * g.a() * twist(g, p));
}

double grad_N_sq(const CarnotGroup& g, const Point& p) {
  require_nonzero(g, p);
  const double nv = norm_N(g, p);
  const double x2 = p.x.squaredNorm();
  const double y2 = twist(g, p).squaredNorm();
  const double a = g.a();
  return std::pow(nv, -6.0) * (x2 * x2 * x2 + a * a / 16.0 * y2);
}

double laplacian_N_closed(const CarnotGroup& g, const Point& p) {
  require_nonzero(g, p);
  const double nv = norm_N(g, p);
  const double a = g.a();
  const double x2 = p.x.squaredNorm();
  const double y2 = twist(g, p).squaredNorm();
  double lam_x2 = 0.0;
  for (int k = 0; k < g.m(); ++k) lam_x2 += (g.lambda(k) * p.x).squaredNorm();
  const double n3 = std::pow(nv, -3.0);
  return -3.0 * std::pow(nv, -7.0) * (x2 * x2 * x2 + a * a / 16.0 * y2) +
         (g.n() + 2) * x2 * n3 + a / 8.0 * lam_x2 * n3;
}

double radial_identity_residual(const CarnotGroup& g, const Point& p) {
  const double xn = p.x.norm();
  if (xn == 0.0) throw ZeroHorizontal("radial identity needs |x| > 0");
  const double nv = norm_N(g, p);
  const double radial = (p.x / xn).dot(grad_N_closed(g, p));
  return radial - std::pow(xn / nv, 3.0);
}

NormGeometryReport estimate_lemma2_constants(
    const CarnotGroup& g, long sample_count, std::uint64_t seed,
    std::pair<double, double> radius_range) {
  NormGeometryReport report;
  report.sample_count = sample_count;
  report.seed = seed;
  report.radius_min = radius_range.first;
  report.radius_max = radius_range.second;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(std::log(radius_range.first),
                                              std::log(radius_range.second));

  double a_hat = std::numeric_limits<double>::infinity();
  double c_hat = 0.0;
  double b_hat = 0.0;
  double min_lap = std::numeric_limits<double>::infinity();

  long accepted = 0;
  while (accepted < sample_count) {
    Point p = random_point(g, rng, 1.0);
    const double nv0 = norm_N(g, p);
    if (nv0 == 0.0) continue;
    p = dilate(std::exp(unif(rng)) / nv0, p);
    const double nv = norm_N(g, p);
    const double xn = p.x.norm();
    if (xn / nv < kHorizontalCut) continue;
    ++accepted;

    const double ratio_scale = nv * nv / (xn * xn);
    const double r1 = grad_N_sq(g, p) * ratio_scale;
    const double lap = laplacian_N_closed(g, p);
    const double r2 = std::abs(lap) * nv * ratio_scale;

    a_hat = std::min(a_hat, r1);
    c_hat = std::max(c_hat, r1);
    if (r2 > b_hat) {
      b_hat = r2;
      report.b_argmax = p;
    }
    min_lap = std::min(min_lap, lap);
  }

  report.a_hat = a_hat;
  report.c_hat = c_hat;
  report.b_hat = b_hat;
  report.laplacian_nonnegative = min_lap >= 0.0;
  return report;
}

ScalarField norm_field(const CarnotGroup& g) {
  const double a = g.a();
  ScalarField f = ScalarField::from_generic(
      "N", [a](auto x, auto z) { return homogeneous_norm(a, x, z); });
  f.with_gradient([g](const Point& p) -> Eigen::VectorXd {
    if (norm_N(g, p) == 0.0) return Eigen::VectorXd::Zero(g.n());
    return grad_N_closed(g, p);
  });
  f.with_laplacian([g](const Point& p) { return laplacian_N_closed(g, p); });
  return f;
}

}  // namespace carnot
