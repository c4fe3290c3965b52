#include "carnot/mcmc.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <vector>

namespace carnot {

namespace {
constexpr double kTargetAcceptance = 0.315;  // middle of [0.23, 0.40]
constexpr long kAdaptBatch = 200;
}  // namespace

Chain mcmc_sample(const BoltzmannMeasure& mu, const SamplerOptions& opts) {
  if (opts.count < 10000) throw ConfigError("sampler needs count >= 1e4");
  const int n = mu.group.n();
  const int m = mu.group.m();
  const long burn_in = opts.count / 5;
  const long kept = opts.count - burn_in;

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  Point cur = random_point(mu.group, rng, 1.0);
  double cur_potential = mu.potential(cur);

  Chain chain;
  chain.n = n;
  chain.m = m;
  chain.seed = opts.seed;
  chain.burn_in = burn_in;
  chain.states.resize(n + m, kept);

  double log_step = std::log(opts.step0);
  long batch_accepted = 0;
  long batch_index = 0;
  long post_accepted = 0;
  Point prop = cur;

  for (long t = 0; t < opts.count; ++t) {
    const double step = std::exp(log_step);
    const double z_step = opts.isotropic ? step : step * step;
    for (int i = 0; i < n; ++i) prop.x(i) = cur.x(i) + step * normal(rng);
    for (int j = 0; j < m; ++j) prop.z(j) = cur.z(j) + z_step * normal(rng);

    const double prop_potential = mu.potential(prop);
    const bool accept = std::log(unif(rng)) < cur_potential - prop_potential;
    if (accept) {
      cur = prop;
      cur_potential = prop_potential;
    }

    if (t < burn_in) {
      batch_accepted += accept;
      if (opts.adapt && (t + 1) % kAdaptBatch == 0) {
        ++batch_index;
        const double rate = double(batch_accepted) / kAdaptBatch;
        log_step += (rate - kTargetAcceptance) / std::sqrt(double(batch_index));
        batch_accepted = 0;
      }
    } else {
      post_accepted += accept;
      chain.states.col(t - burn_in).head(n) = cur.x;
      chain.states.col(t - burn_in).tail(m) = cur.z;
    }
  }

  chain.step = std::exp(log_step);
  chain.acceptance_rate = double(post_accepted) / kept;
  if (chain.acceptance_rate < 0.1 || chain.acceptance_rate > 0.6) {
    throw AdaptationFailed("post-burn-in acceptance " +
                           std::to_string(chain.acceptance_rate) +
                           " outside [0.1, 0.6]");
  }

  std::vector<double> norms(kept);
  for (long t = 0; t < kept; ++t) {
    norms[t] = homogeneous_norm(mu.group.a(), chain.x_at(t), chain.z_at(t));
  }
  chain.ess = effective_sample_size(norms);
  return chain;
}

Chain mcmc_sample(const BoltzmannMeasure& mu, long count, std::uint64_t seed,
                  double step0) {
  SamplerOptions opts;
  opts.count = count;
  opts.seed = seed;
  opts.step0 = step0;
  return mcmc_sample(mu, opts);
}

double effective_sample_size(std::span<const double> series) {
  const long len = static_cast<long>(series.size());
  if (len < 4) return static_cast<double>(len);

  double mean = 0.0;
  for (const double v : series) mean += v;
  mean /= len;

  auto gamma = [&](long lag) {
    double acc = 0.0;
    for (long t = 0; t + lag < len; ++t) {
      acc += (series[t] - mean) * (series[t + lag] - mean);
    }
    return acc / len;
  };

  const double g0 = gamma(0);
  if (g0 <= 0.0) return static_cast<double>(len);

  // Sum pairs gamma_{2j} + gamma_{2j+1} while they stay positive.
  const long max_lag = std::min<long>(len / 2, 2000);
  double tau = -1.0;
  for (long j = 0; 2 * j + 1 <= max_lag; ++j) {
    const double pair = gamma(2 * j) + gamma(2 * j + 1);
    if (pair <= 0.0) break;
    tau += 2.0 * pair / g0;
  }
  tau = std::max(tau, 1.0);
  return len / tau;
}

void write_chain_csv(std::ostream& out, const Chain& chain) {
  out << "idx";
  for (int i = 1; i <= chain.n; ++i) out << ",x" << i;
  for (int j = 1; j <= chain.m; ++j) out << ",z" << j;
  out << "\n";
  char buf[40];
  for (long t = 0; t < chain.length(); ++t) {
    out << t;
    for (int r = 0; r < chain.n + chain.m; ++r) {
      std::snprintf(buf, sizeof(buf), ",%.17g", chain.states(r, t));
      out << buf;
    }
    out << "\n";
  }
}

}  // namespace carnot
