#include "carnot/group.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <utility>

#include "carnot/norm_core.hpp"

namespace carnot {

namespace {
constexpr double kSkewTol = 1e-12;
constexpr double kRankTolFactor = 1e-9;
constexpr double kHTypeTol = 1e-10;
}  // namespace

GroupValidation validate_step_two(const std::vector<Eigen::MatrixXd>& lambdas,
                                  double a) {
  GroupValidation result;
  const int m = static_cast<int>(lambdas.size());
  if (m < 1) return result;
  const int n = static_cast<int>(lambdas.front().rows());

  result.dims_ok = n >= 2 && n <= kMaxHorizontalDim && m <= kMaxVerticalDim &&
                   a > 0.0;
  for (const auto& lam : lambdas) {
    if (lam.rows() != n || lam.cols() != n) {
      result.dims_ok = false;
      return result;
    }
  }

  result.max_skew_defect = 0.0;
  for (const auto& lam : lambdas) {
    const double defect = (lam + lam.transpose()).cwiseAbs().maxCoeff();
    result.max_skew_defect = std::max(result.max_skew_defect, defect);
  }
  result.skew_ok = result.max_skew_defect <= kSkewTol;

  // Rank of the m x n^2 matrix of vectorized families, via singular values.
  Eigen::MatrixXd vec(m, n * n);
  for (int j = 0; j < m; ++j) {
    vec.row(j) = Eigen::Map<const Eigen::VectorXd>(lambdas[j].data(), n * n);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(vec);
  const auto& sv = svd.singularValues();
  const double thresh = kRankTolFactor * sv(0);
  result.rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > thresh) ++result.rank;
  }
  result.independent_ok = result.rank == m;
  return result;
}

HTypeFlags detect_htype(const std::vector<Eigen::MatrixXd>& lambdas) {
  HTypeFlags flags;
  const int n = static_cast<int>(lambdas.front().rows());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  flags.orthogonal = true;
  for (const auto& lam : lambdas) {
    if ((lam.transpose() * lam - id).cwiseAbs().maxCoeff() > kHTypeTol) {
      flags.orthogonal = false;
      break;
    }
  }
  flags.anticommuting = true;
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
    for (std::size_t j = i + 1; j < lambdas.size(); ++j) {
      const Eigen::MatrixXd anti =
          lambdas[i] * lambdas[j] + lambdas[j] * lambdas[i];
      if (anti.cwiseAbs().maxCoeff() > kHTypeTol) {
        flags.anticommuting = false;
        break;
      }
    }
    if (!flags.anticommuting) break;
  }
  return flags;
}

CarnotGroup::CarnotGroup(std::vector<Eigen::MatrixXd> lambdas, double a)
    : m_(static_cast<int>(lambdas.size())), lambdas_(std::move(lambdas)), a_(a) {
  n_ = static_cast<int>(lambdas_.front().rows());
  htype_ = detect_htype(lambdas_);
}

CarnotGroup make_step_two(std::vector<Eigen::MatrixXd> lambdas, double a) {
  if (lambdas.empty()) throw BadDimension("need at least one matrix");
  const auto v = validate_step_two(lambdas, a);
  if (!v.dims_ok) throw BadDimension("matrices must be square n x n, 2 <= n <= 16, m <= 8, a > 0");
  if (!v.skew_ok) throw SkewViolation("matrix family is not skew-symmetric");
  if (!v.independent_ok) throw DependentMatrices("matrix family is linearly dependent");
  return CarnotGroup(std::move(lambdas), a);
}

CarnotGroup make_heisenberg(int d) {
  if (d < 1) throw BadDimension("d must be >= 1");
  const int n = 2 * d;
  Eigen::MatrixXd lam = Eigen::MatrixXd::Zero(n, n);
  for (int b = 0; b < d; ++b) {
    lam(2 * b, 2 * b + 1) = 1.0;
    lam(2 * b + 1, 2 * b) = -1.0;
  }
  return make_step_two({lam}, 16.0);
}

CarnotGroup make_random_step_two(int n, int m, double a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Eigen::MatrixXd> lambdas;
    lambdas.reserve(m);
    for (int j = 0; j < m; ++j) {
      Eigen::MatrixXd raw(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) raw(r, c) = normal(rng);
      lambdas.push_back(0.5 * (raw - raw.transpose()));
    }
    if (validate_step_two(lambdas, a).ok()) {
      return CarnotGroup(std::move(lambdas), a);
    }
  }
  throw DependentMatrices("failed to draw an independent skew family");
}

namespace {
void require_dims(const CarnotGroup& g, const Point& p) {
  if (p.x.size() != g.n() || p.z.size() != g.m()) {
    throw DimensionMismatch("point does not match group dimensions");
  }
}
}  // namespace

Point group_op(const CarnotGroup& g, const Point& p, const Point& r) {
  require_dims(g, p);
  require_dims(g, r);
  Point out;
  out.x = p.x + r.x;
  out.z.resize(g.m());
  for (int j = 0; j < g.m(); ++j) {
    out.z(j) = p.z(j) + r.z(j) + 0.5 * (g.lambda(j) * p.x).dot(r.x);
  }
  return out;
}

Point inverse(const Point& p) { return {-p.x, -p.z}; }

Point dilate(double lambda_s, const Point& p) {
  return {lambda_s * p.x, lambda_s * lambda_s * p.z};
}

double quasi_distance(const CarnotGroup& g, const Point& p, const Point& r) {
  const Point diff = group_op(g, inverse(r), p);
  return homogeneous_norm(g.a(), std::span<const double>(diff.x.data(), diff.x.size()),
                          std::span<const double>(diff.z.data(), diff.z.size()));
}

Point random_point(const CarnotGroup& g, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Point p = Point::origin(g.n(), g.m());
  for (int i = 0; i < g.n(); ++i) p.x(i) = scale * normal(rng);
  for (int j = 0; j < g.m(); ++j) p.z(j) = scale * scale * normal(rng);
  return p;
}

Point random_point(const CarnotGroup& g, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  return random_point(g, rng, scale);
}

}  // namespace carnot
