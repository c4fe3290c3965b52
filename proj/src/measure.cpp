#include "carnot/measure.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <vector>

namespace carnot {

namespace {

constexpr int kNodesPerPanel = 24;
constexpr double kPanelGrading = 2.0;  // cluster panels toward the origin

struct Axis {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Graded composite Gauss-Legendre rule on [0, cut].
Axis build_axis(double cut, int panels) {
  using Rule = boost::math::quadrature::gauss<double, kNodesPerPanel>;
  Axis axis;
  axis.nodes.reserve(static_cast<std::size_t>(panels) * kNodesPerPanel);
  axis.weights.reserve(axis.nodes.capacity());
  for (int i = 0; i < panels; ++i) {
    const double lo = cut * std::pow(double(i) / panels, kPanelGrading);
    const double hi = cut * std::pow(double(i + 1) / panels, kPanelGrading);
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t j = 0; j < Rule::abscissa().size(); ++j) {
      const double t = Rule::abscissa()[j];
      const double w = Rule::weights()[j] * half;
      // abscissa() stores the non-negative half of the symmetric rule
      axis.nodes.push_back(mid + half * t);
      axis.weights.push_back(w);
      if (t != 0.0) {
        axis.nodes.push_back(mid - half * t);
        axis.weights.push_back(w);
      }
    }
  }
  return axis;
}

}  // namespace

RadialCut radial_tail_cut(const BoltzmannMeasure& mu) {
  const int q_hom = mu.group.q_hom();
  auto log_mass = [&](double nu) {
    return -mu.profile.g(nu) + (q_hom - 1) * std::log(nu);
  };
  const double log_tail = std::log(mu.tail_epsilon);

  double peak = -std::numeric_limits<double>::infinity();
  double nu = 1e-3;
  while (nu <= mu.tail_scan_max) {
    const double v = log_mass(nu);
    peak = std::max(peak, v);
    if (nu > 1.0 && v < peak + log_tail) {
      RadialCut cut;
      cut.nu_cut = 1.1 * nu;  // safety margin on the scan step
      cut.r_cut = cut.nu_cut;
      cut.s_cut = cut.nu_cut * cut.nu_cut / std::sqrt(mu.group.a());
      return cut;
    }
    nu *= 1.05;
  }
  throw TailNotConverged("density tail did not drop below threshold before scan limit");
}

double radial_integral_raw(const BoltzmannMeasure& mu,
                           const std::function<double(double, double)>& h) {
  const RadialCut cut = radial_tail_cut(mu);
  const Axis ar = build_axis(cut.r_cut, mu.quad_resolution);
  const Axis as = build_axis(cut.s_cut, mu.quad_resolution);
  const int n = mu.group.n();
  const int m = mu.group.m();
  const double a = mu.group.a();

  double total = 0.0;
  for (std::size_t i = 0; i < ar.nodes.size(); ++i) {
    const double r = ar.nodes[i];
    const double rw = ar.weights[i] * std::pow(r, n - 1);
    double row = 0.0;
    for (std::size_t j = 0; j < as.nodes.size(); ++j) {
      const double s = as.nodes[j];
      const double nv = std::pow(r * r * r * r + a * s * s, 0.25);
      const double w = std::exp(-mu.profile.g(nv)) * std::pow(s, m - 1);
      row += as.weights[j] * w * h(r, s);
    }
    total += rw * row;
  }
  return total;
}

double radial_quadrature(const BoltzmannMeasure& mu,
                         const std::function<double(double, double)>& h) {
  const RadialCut cut = radial_tail_cut(mu);
  const Axis ar = build_axis(cut.r_cut, mu.quad_resolution);
  const Axis as = build_axis(cut.s_cut, mu.quad_resolution);
  const int n = mu.group.n();
  const int m = mu.group.m();
  const double a = mu.group.a();

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < ar.nodes.size(); ++i) {
    const double r = ar.nodes[i];
    const double rw = ar.weights[i] * std::pow(r, n - 1);
    double num_row = 0.0;
    double den_row = 0.0;
    for (std::size_t j = 0; j < as.nodes.size(); ++j) {
      const double s = as.nodes[j];
      const double nv = std::pow(r * r * r * r + a * s * s, 0.25);
      const double w = as.weights[j] * std::exp(-mu.profile.g(nv)) * std::pow(s, m - 1);
      den_row += w;
      num_row += w * h(r, s);
    }
    num += rw * num_row;
    den += rw * den_row;
  }
  return num / den;
}

double log_sphere_area(int d) {
  return M_LN2 + 0.5 * d * std::log(M_PI) - std::lgamma(0.5 * d);
}

double estimate_log_z(const BoltzmannMeasure& mu) {
  const double raw = radial_integral_raw(mu, [](double, double) { return 1.0; });
  return log_sphere_area(mu.group.n()) + log_sphere_area(mu.group.m()) +
         std::log(raw);
}

double ensure_log_z(BoltzmannMeasure& mu) {
  if (!mu.log_z) mu.log_z = estimate_log_z(mu);
  return *mu.log_z;
}

}  // namespace carnot
