#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <span>

#include "carnot/measure.hpp"

namespace carnot {

/// Post-burn-in states of a random-walk Metropolis run, stored column-wise
/// (x on top of z). Immutable after construction.
struct Chain {
  Eigen::MatrixXd states;
  int n = 0;
  int m = 0;
  double acceptance_rate = 0.0;
  double ess = 0.0;  // effective sample size of the N(p) series
  std::uint64_t seed = 0;
  long burn_in = 0;
  double step = 0.0;  // final (frozen) x-scale of the proposal

  long length() const { return states.cols(); }
  std::span<const double> x_at(long t) const {
    return {states.col(t).data(), static_cast<std::size_t>(n)};
  }
  std::span<const double> z_at(long t) const {
    return {states.col(t).data() + n, static_cast<std::size_t>(m)};
  }
  Point point(long t) const {
    Point p;
    p.x = states.col(t).head(n);
    p.z = states.col(t).tail(m);
    return p;
  }
};

struct SamplerOptions {
  long count = 100000;  // total steps; the first 20% are burn-in
  std::uint64_t seed = 1;
  double step0 = 1.0;
  bool adapt = true;       // Robbins-Monro step adaptation during burn-in
  bool isotropic = false;  // fallback: same proposal scale for x and z
};

/// Random-walk Metropolis for the unnormalized density e^{-g(N)}. The
/// proposal scales the z-layer by step^2, mirroring the dilation weighting
/// of the two layers. Adaptation targets acceptance in [0.23, 0.40] and is
/// frozen after burn-in; throws AdaptationFailed when the post-burn-in
/// rate lands outside [0.1, 0.6].
Chain mcmc_sample(const BoltzmannMeasure& mu, const SamplerOptions& opts);
Chain mcmc_sample(const BoltzmannMeasure& mu, long count, std::uint64_t seed,
                  double step0 = 1.0);

/// Geyer initial-positive-sequence truncation of the autocorrelation time.
double effective_sample_size(std::span<const double> series);

/// CSV with header idx,x1..xn,z1..zm.
void write_chain_csv(std::ostream& out, const Chain& chain);

}  // namespace carnot
