#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "carnot/errors.hpp"

namespace carnot {

/// Element of the group in exponential coordinates: x is the horizontal
/// layer (length n), z the vertical layer (length m).
struct Point {
  Eigen::VectorXd x;
  Eigen::VectorXd z;

  static Point origin(int n, int m) {
    return {Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(m)};
  }
};

struct HTypeFlags {
  bool orthogonal = false;     // each L^(j) satisfies L^T L = I
  bool anticommuting = false;  // L^(i) L^(j) = -L^(j) L^(i) for i != j
};

struct GroupValidation {
  bool skew_ok = false;
  bool independent_ok = false;
  bool dims_ok = false;
  double max_skew_defect = 0.0;
  int rank = 0;
  bool ok() const { return skew_ok && independent_ok && dims_ok; }
};

/// Step-two group on R^{n+m} with law
///   (x,z) o (x',z') = (x + x', z_j + z'_j + 1/2 <L^(j) x, x'>),
/// dilations d_l(x,z) = (l x, l^2 z), and homogeneous norm parameter a.
class CarnotGroup {
 public:
  CarnotGroup(std::vector<Eigen::MatrixXd> lambdas, double a);

  int n() const { return n_; }
  int m() const { return m_; }
  int q_hom() const { return n_ + 2 * m_; }  // homogeneous dimension
  double a() const { return a_; }
  const std::vector<Eigen::MatrixXd>& lambdas() const { return lambdas_; }
  const Eigen::MatrixXd& lambda(int j) const { return lambdas_[j]; }
  HTypeFlags htype() const { return htype_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Eigen::MatrixXd> lambdas_;
  double a_ = 0.0;
  HTypeFlags htype_;
};

// Caps chosen for dense desk-scale matrices.
inline constexpr int kMaxHorizontalDim = 16;
inline constexpr int kMaxVerticalDim = 8;

/// Non-throwing validation of a candidate matrix family.
GroupValidation validate_step_two(const std::vector<Eigen::MatrixXd>& lambdas,
                                  double a);

/// Throws SkewViolation / DependentMatrices / BadDimension.
CarnotGroup make_step_two(std::vector<Eigen::MatrixXd> lambdas, double a);

/// H^d: n = 2d, m = 1, L^(1) = block-diagonal [[0,1],[-1,0]], a = 16
/// (the Kaplan-norm constant).
CarnotGroup make_heisenberg(int d);

/// Random skew family, rejection-sampled until linearly independent.
CarnotGroup make_random_step_two(int n, int m, double a, std::uint64_t seed);

HTypeFlags detect_htype(const std::vector<Eigen::MatrixXd>& lambdas);

Point group_op(const CarnotGroup& g, const Point& p, const Point& r);
Point inverse(const Point& p);
Point dilate(double lambda_s, const Point& p);

/// N(r^{-1} o p); symmetric since N depends on (|x|, |z|) only.
double quasi_distance(const CarnotGroup& g, const Point& p, const Point& r);

/// x ~ N(0, scale^2) per coordinate, z ~ N(0, scale^4): matches the
/// dilation weighting of the two layers.
Point random_point(const CarnotGroup& g, std::mt19937_64& rng, double scale);
Point random_point(const CarnotGroup& g, std::uint64_t seed, double scale);

}  // namespace carnot
