#include "carnot/hcalculus.hpp"

#include <array>
#include <cmath>

namespace carnot {

namespace {

// Coefficient of d/dz_k in X_i at horizontal position x, in S arithmetic.
template <typename S>
S vertical_coeff(const CarnotGroup& g, int k, int i, std::span<const S> x) {
  S c{};
  const auto& lam = g.lambda(k);
  for (int l = 0; l < g.n(); ++l) c = c + lam(i, l) * x[l];
  return 0.5 * c;
}

// One seeded dual pass over S-valued coordinates; returns X_i f as S.
// The vertical coefficients are computed in S so that nesting (S itself a
// dual) differentiates their x-dependence as well.
template <typename S>
S xi_generic(const CarnotGroup& g, int i, const ScalarField& f,
             std::span<const S> x, std::span<const S> z) {
  std::array<Dual<S>, kMaxHorizontalDim> dx;
  std::array<Dual<S>, kMaxVerticalDim> dz;
  for (int j = 0; j < g.n(); ++j) dx[j] = {x[j], S(j == i ? 1.0 : 0.0)};
  for (int k = 0; k < g.m(); ++k) dz[k] = {z[k], vertical_coeff(g, k, i, x)};
  return f.eval(std::span<const Dual<S>>(dx.data(), g.n()),
                std::span<const Dual<S>>(dz.data(), g.m()))
      .d;
}

Eigen::VectorXd xi_direction(const CarnotGroup& g, int i, const Point& p) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(g.n() + g.m());
  w(i) = 1.0;
  for (int k = 0; k < g.m(); ++k) {
    w(g.n() + k) = 0.5 * g.lambda(k).row(i).dot(p.x);
  }
  return w;
}

Point shifted(const Point& p, const Eigen::VectorXd& w, double h) {
  Point q = p;
  q.x += h * w.head(p.x.size());
  q.z += h * w.tail(p.z.size());
  return q;
}

double xi_fd(const CarnotGroup& g, int i, const ScalarField& f, const Point& p,
             double h) {
  const Eigen::VectorXd w = xi_direction(g, i, p);
  return (f(shifted(p, w, h)) - f(shifted(p, w, -h))) / (2.0 * h);
}

void check_index(const CarnotGroup& g, int i) {
  if (i < 0 || i >= g.n()) throw IndexOutOfRange("horizontal index out of range");
}

}  // namespace

double fd_step(const Point& p) {
  const double mag = std::sqrt(p.x.squaredNorm() + p.z.squaredNorm());
  return 1e-5 * std::max(1.0, mag);
}

double xi_apply(const CarnotGroup& g, int i, const ScalarField& f,
                const Point& p, std::optional<DiffMode> mode) {
  check_index(g, i);
  const DiffMode m = mode.value_or(f.mode());
  if (m == DiffMode::analytic && f.has_analytic_grad()) {
    return f.analytic_grad(p)(i);
  }
  if (m != DiffMode::central_difference && f.has_generic()) {
    return xi_generic<double>(g, i, f,
                              {p.x.data(), static_cast<std::size_t>(p.x.size())},
                              {p.z.data(), static_cast<std::size_t>(p.z.size())});
  }
  return xi_fd(g, i, f, p, fd_step(p));
}

Eigen::VectorXd sub_gradient(const CarnotGroup& g, const ScalarField& f,
                             const Point& p, std::optional<DiffMode> mode) {
  const DiffMode m = mode.value_or(f.mode());
  if (m == DiffMode::analytic && f.has_analytic_grad()) {
    return f.analytic_grad(p);
  }
  Eigen::VectorXd out(g.n());
  for (int i = 0; i < g.n(); ++i) out(i) = xi_apply(g, i, f, p, m);
  return out;
}

double sub_laplacian(const CarnotGroup& g, const ScalarField& f, const Point& p,
                     std::optional<DiffMode> mode, FdOrder fd_order) {
  const DiffMode m = mode.value_or(f.mode());
  if (m == DiffMode::analytic && f.has_analytic_laplacian()) {
    return f.analytic_laplacian(p);
  }
  if (m != DiffMode::central_difference && f.has_generic()) {
    // Outer dual pass along X_i applied to the inner dual pass.
    std::array<D1, kMaxHorizontalDim> qx;
    std::array<D1, kMaxVerticalDim> qz;
    double total = 0.0;
    for (int i = 0; i < g.n(); ++i) {
      for (int j = 0; j < g.n(); ++j) qx[j] = {p.x(j), j == i ? 1.0 : 0.0};
      for (int k = 0; k < g.m(); ++k) {
        qz[k] = {p.z(k), 0.5 * g.lambda(k).row(i).dot(p.x)};
      }
      total += xi_generic<D1>(g, i, f, std::span<const D1>(qx.data(), g.n()),
                              std::span<const D1>(qz.data(), g.m()))
                   .d;
    }
    return total;
  }
  // Nested directional differences. The inner step is taken at the shifted
  // base points so each X_i f evaluation is itself centered.
  const double h = std::sqrt(fd_step(p));
  double total = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    const Eigen::VectorXd w = xi_direction(g, i, p);
    auto inner = [&](double offset) {
      const Point q = shifted(p, w, offset);
      return xi_fd(g, i, f, q, fd_step(q));
    };
    if (fd_order == FdOrder::second) {
      total += (inner(h) - inner(-h)) / (2.0 * h);
    } else {
      total += (-inner(2.0 * h) + 8.0 * inner(h) - 8.0 * inner(-h) +
                inner(-2.0 * h)) /
               (12.0 * h);
    }
  }
  return total;
}

Eigen::MatrixXd left_jacobian(const CarnotGroup& g, const Point& p) {
  const int n = g.n();
  const int m = g.m();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Identity(n + m, n + m);
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < n; ++i) {
      jac(n + k, i) = 0.5 * g.lambda(k).row(i).dot(p.x);
    }
  }
  return jac;
}

double gradient_self_check(const CarnotGroup& g, const ScalarField& f,
                           std::span<const Point> probes) {
  double worst = 0.0;
  for (const Point& p : probes) {
    const Eigen::VectorXd ga = f.analytic_grad(p);
    Eigen::VectorXd gfd(g.n());
    for (int i = 0; i < g.n(); ++i) {
      gfd(i) = xi_apply(g, i, f, p, DiffMode::central_difference);
    }
    const double scale = std::max(1.0, ga.norm());
    worst = std::max(worst, (ga - gfd).norm() / scale);
  }
  return worst;
}

}  // namespace carnot
