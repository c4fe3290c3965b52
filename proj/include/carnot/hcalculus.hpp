#pragma once

#include <Eigen/Dense>
#include <optional>

#include "carnot/field.hpp"
#include "carnot/group.hpp"

namespace carnot {

/// Finite-difference step: 1e-5 * max(1, |p|), |p| Euclidean over (x, z).
double fd_step(const Point& p);

/// X_i f(p) for the left-invariant horizontal field
///   X_i = d/dx_i + 1/2 sum_k (L^(k) x)_i d/dz_k,   i in [0, n).
/// Dispatch follows `mode` (default: the field's own mode): analytic
/// gradient if available, else a single seeded dual-number pass, else a
/// directional central difference.
double xi_apply(const CarnotGroup& g, int i, const ScalarField& f,
                const Point& p, std::optional<DiffMode> mode = std::nullopt);

/// (X_1 f, ..., X_n f), the horizontal (sub-)gradient.
Eigen::VectorXd sub_gradient(const CarnotGroup& g, const ScalarField& f,
                             const Point& p,
                             std::optional<DiffMode> mode = std::nullopt);

enum class FdOrder { second, fourth };

/// sum_i X_i(X_i f)(p). Uses the field's closed form when present, else
/// nested dual numbers, else nested directional differences.
double sub_laplacian(const CarnotGroup& g, const ScalarField& f, const Point& p,
                     std::optional<DiffMode> mode = std::nullopt,
                     FdOrder fd_order = FdOrder::second);

/// Jacobian at the origin of the left translation by p:
/// [ I_n 0 ; L(x) I_m ] with L(x)_{k,i} = 1/2 (L^(k) x)_i.
Eigen::MatrixXd left_jacobian(const CarnotGroup& g, const Point& p);

/// Max relative deviation between the analytic gradient and central
/// differences over the given probe points.
double gradient_self_check(const CarnotGroup& g, const ScalarField& f,
                           std::span<const Point> probes);

}  // namespace carnot
