#pragma once

#include <functional>
#include <optional>

#include "carnot/group.hpp"
#include "carnot/norm_geometry.hpp"
#include "carnot/profiles.hpp"

namespace carnot {

/// The probability measure dmu = e^{-g(N)} / Z dlambda. The density depends
/// on the point only through (|x|, |z|), which is what makes the radial
/// 2-D quadrature an independent oracle for every Monte-Carlo estimator.
struct BoltzmannMeasure {
  CarnotGroup group;
  GProfile profile;
  int quad_resolution = 12;     // panels per axis
  double tail_epsilon = 1e-13;  // integrand tail / peak cutoff
  double tail_scan_max = 1e6;   // abort the tail scan beyond this N
  std::optional<double> log_z;

  /// g(N(p)), the negative log density up to the normalizer.
  double potential(const Point& p) const {
    return profile.g(norm_N(group, p));
  }
};

struct RadialCut {
  double nu_cut = 0.0;  // cutoff in the homogeneous norm
  double r_cut = 0.0;   // |x| range
  double s_cut = 0.0;   // |z| range
};

/// Scans nu -> e^{-g(nu)} nu^{Q-1} for the peak and the point where the
/// tail drops below tail_epsilon of it. Throws TailNotConverged when the
/// scan hits tail_scan_max first.
RadialCut radial_tail_cut(const BoltzmannMeasure& mu);

/// E_mu[h(|x|, |z|)] by tensor Gauss-Legendre panels on [0,r_cut] x
/// [0,s_cut], panels graded toward the origin.
double radial_quadrature(const BoltzmannMeasure& mu,
                         const std::function<double(double, double)>& h);

/// The raw integral over (r, s) of h e^{-g(N)} r^{n-1} s^{m-1}, without
/// sphere factors or normalization.
double radial_integral_raw(const BoltzmannMeasure& mu,
                           const std::function<double(double, double)>& h);

/// log Z = log(S_{n-1} S_{m-1}) + log of the raw integral with h = 1,
/// where S_{d-1} = 2 pi^{d/2} / Gamma(d/2) (S_0 = 2 comes out of the same
/// formula at d = 1).
double estimate_log_z(const BoltzmannMeasure& mu);

/// Computes and caches log Z on the measure.
double ensure_log_z(BoltzmannMeasure& mu);

double log_sphere_area(int d);  // log S_{d-1} for d >= 1

}  // namespace carnot
