#include "carnot/profiles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "carnot/errors.hpp"

namespace carnot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlopeTol = 0.01;  // "not growing" threshold on log-log slope

double log_sinh(double u) {
  // log sinh u = u + log1p(-exp(-2u)) - log 2, stable for u > 0
  if (u <= 0.0) return -kInf;
  return u + std::log1p(-std::exp(-2.0 * u)) - M_LN2;
}

double log_cosh(double u) { return u + std::log1p(std::exp(-2.0 * u)) - M_LN2; }

double log_sum_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

GProfile GProfile::power(double k) {
  if (k < 1.0) throw ConfigError("power profile needs k >= 1");
  return {Kind::power, k, 0.0, 0.0};
}

GProfile GProfile::cosh_power(double k) {
  if (k < 1.0) throw ConfigError("cosh_power profile needs k >= 1");
  return {Kind::cosh_power, k, 0.0, 0.0};
}

GProfile GProfile::power_log(double k) {
  if (k < 1.0) throw ConfigError("power_log profile needs k >= 1");
  return {Kind::power_log, k, 0.0, 0.0};
}

GProfile GProfile::alpha_power(double p, double alpha) {
  if (p < 1.0 || alpha <= 0.0) throw ConfigError("alpha_power needs p >= 1, alpha > 0");
  return {Kind::alpha_power, 0.0, p, alpha};
}

double GProfile::g(double s) const {
  switch (kind) {
    case Kind::power:
      return std::pow(s, k);
    case Kind::cosh_power:
      return std::cosh(std::pow(s, k));
    case Kind::power_log:
      return std::pow(s, k) * std::log1p(s);
    case Kind::alpha_power:
      return alpha * std::pow(s, p);
  }
  return 0.0;
}

double GProfile::g1(double s) const {
  switch (kind) {
    case Kind::power:
      return k * std::pow(s, k - 1.0);
    case Kind::cosh_power:
      return k * std::pow(s, k - 1.0) * std::sinh(std::pow(s, k));
    case Kind::power_log:
      return k * std::pow(s, k - 1.0) * std::log1p(s) + std::pow(s, k) / (s + 1.0);
    case Kind::alpha_power:
      return alpha * p * std::pow(s, p - 1.0);
  }
  return 0.0;
}

double GProfile::g2(double s) const {
  switch (kind) {
    case Kind::power:
      return k * (k - 1.0) * std::pow(s, k - 2.0);
    case Kind::cosh_power: {
      const double u = std::pow(s, k);
      return k * (k - 1.0) * std::pow(s, k - 2.0) * std::sinh(u) +
             k * k * std::pow(s, 2.0 * k - 2.0) * std::cosh(u);
    }
    case Kind::power_log:
      return k * (k - 1.0) * std::pow(s, k - 2.0) * std::log1p(s) +
             2.0 * k * std::pow(s, k - 1.0) / (s + 1.0) -
             std::pow(s, k) / ((s + 1.0) * (s + 1.0));
    case Kind::alpha_power:
      return alpha * p * (p - 1.0) * std::pow(s, p - 2.0);
  }
  return 0.0;
}

double GProfile::log_g(double s) const {
  const double ls = std::log(s);
  switch (kind) {
    case Kind::power:
      return k * ls;
    case Kind::cosh_power:
      return log_cosh(std::pow(s, k));
    case Kind::power_log:
      return k * ls + std::log(std::log1p(s));
    case Kind::alpha_power:
      return std::log(alpha) + p * ls;
  }
  return -kInf;
}

double GProfile::log_g1(double s) const {
  const double ls = std::log(s);
  switch (kind) {
    case Kind::power:
      return std::log(k) + (k - 1.0) * ls;
    case Kind::cosh_power:
      return std::log(k) + (k - 1.0) * ls + log_sinh(std::pow(s, k));
    case Kind::power_log:
      return std::log(g1(s));
    case Kind::alpha_power:
      return std::log(alpha * p) + (p - 1.0) * ls;
  }
  return -kInf;
}

double GProfile::log_g2(double s) const {
  const double ls = std::log(s);
  switch (kind) {
    case Kind::power:
      if (k <= 1.0) return -kInf;
      return std::log(k * (k - 1.0)) + (k - 2.0) * ls;
    case Kind::cosh_power: {
      const double u = std::pow(s, k);
      const double cosh_term = 2.0 * std::log(k) + (2.0 * k - 2.0) * ls + log_cosh(u);
      if (k <= 1.0) return cosh_term;
      const double sinh_term =
          std::log(k * (k - 1.0)) + (k - 2.0) * ls + log_sinh(u);
      return log_sum_exp(sinh_term, cosh_term);
    }
    case Kind::power_log: {
      const double v = g2(s);
      return v > 0.0 ? std::log(v) : -kInf;
    }
    case Kind::alpha_power:
      if (p <= 1.0) return -kInf;
      return std::log(alpha * p * (p - 1.0)) + (p - 2.0) * ls;
  }
  return -kInf;
}

std::string GProfile::label() const {
  auto num = [](double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  switch (kind) {
    case Kind::power:
      return "power(" + num(k) + ")";
    case Kind::cosh_power:
      return "cosh_power(" + num(k) + ")";
    case Kind::power_log:
      return "power_log(" + num(k) + ")";
    case Kind::alpha_power:
      return "alpha_power(" + num(p) + "," + num(alpha) + ")";
  }
  return "?";
}

std::vector<double> default_condition_grid() {
  const int count = 200;
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    grid[i] = std::pow(10.0, 3.0 * i / (count - 1));
  }
  return grid;
}

GridVerdict grid_theorem1(const LogFn& log_g1, const LogFn& log_g2,
                          std::span<const double> grid) {
  GridVerdict verdict;
  verdict.ok = true;
  verdict.witness_value = -kInf;
  for (const double s : grid) {
    const double margin = log_g2(s) - (3.0 * log_g1(s) + 3.0 * std::log(s));
    if (margin > verdict.witness_value) {
      verdict.witness_value = margin;
      verdict.witness_s = s;
    }
    if (margin > 1e-12) verdict.ok = false;
  }
  return verdict;
}

GridVerdict check_theorem1_condition(const GProfile& profile) {
  const auto grid = default_condition_grid();
  return check_theorem1_condition(profile, grid);
}

GridVerdict check_theorem1_condition(const GProfile& profile,
                                     std::span<const double> grid) {
  return grid_theorem1([&](double s) { return profile.log_g1(s); },
                       [&](double s) { return profile.log_g2(s); }, grid);
}

double last_decade_slope(const LogFn& value, std::span<const double> grid) {
  const double s_end = grid.back();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long count = 0;
  for (const double s : grid) {
    if (s < s_end / 10.0) continue;
    const double y = value(s);
    if (!std::isfinite(y)) continue;
    const double x = std::log(s);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return -kInf;
  const double denom = count * sxx - sx * sx;
  return (count * sxy - sx * sy) / denom;
}

GridVerdict grid_eta_unbounded(const LogFn& log_g1, std::span<const double> grid) {
  auto log_eta = [&](double s) { return log_g1(s) - 2.0 * std::log(s); };
  GridVerdict verdict;
  verdict.witness_s = grid.back();
  verdict.witness_value = last_decade_slope(log_eta, grid);
  verdict.ok = verdict.witness_value > kSlopeTol &&
               log_eta(grid.back()) > std::log(10.0);
  return verdict;
}

bool check_eta_unbounded(const GProfile& profile) {
  switch (profile.kind) {
    case GProfile::Kind::power:
      return profile.k > 3.0;
    case GProfile::Kind::power_log:
      return profile.k >= 3.0;
    case GProfile::Kind::cosh_power:
      return true;
    case GProfile::Kind::alpha_power:
      return profile.p > 3.0;
  }
  return false;
}

bool check_g_increasing(const GProfile& profile, std::span<const double> grid) {
  for (const double s : grid) {
    if (profile.g1(s) < 0.0) return false;
  }
  return true;
}

ConditionReport check_theorem11_conditions(const GProfile& profile, double beta) {
  if (beta <= 0.0 || beta > 1.0) throw ConfigError("beta must lie in (0, 1]");
  ConditionReport report;
  report.beta = beta;
  const auto grid = default_condition_grid();

  report.t11_gprime_increasing = true;
  double prev = profile.log_g1(grid.front());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = profile.log_g1(grid[i]);
    if (cur < prev - 1e-10) {
      report.t11_gprime_increasing = false;
      break;
    }
    prev = cur;
  }

  // g <= (c g'/s^2)^{1/beta} for some c iff g (s^2/g')^{1/beta} stays bounded.
  auto log_phi = [&](double s) {
    return profile.log_g(s) + (2.0 * std::log(s) - profile.log_g1(s)) / beta;
  };
  report.power_bound_slope = last_decade_slope(log_phi, grid);
  report.power_bound_sup_log = -kInf;
  for (const double s : grid) {
    report.power_bound_sup_log = std::max(report.power_bound_sup_log, log_phi(s));
  }
  report.t11_g_power_bound = report.power_bound_slope <= kSlopeTol;

  auto log_psi = [&](double s) {
    return profile.log_g2(s) - 2.0 * profile.log_g1(s);
  };
  report.gpp_slope = last_decade_slope(log_psi, grid);
  report.t11_gpp_bound = report.gpp_slope <= kSlopeTol;

  return report;
}

ConditionReport make_condition_report(const GProfile& profile, double beta) {
  ConditionReport report = check_theorem11_conditions(profile, beta);
  const auto t1 = check_theorem1_condition(profile);
  report.theorem1_ok = t1.ok;
  report.theorem1_witness_s = t1.witness_s;
  report.theorem1_margin = t1.witness_value;
  report.eta_unbounded = check_eta_unbounded(profile);
  const auto grid = default_condition_grid();
  report.eta_slope =
      grid_eta_unbounded([&](double s) { return profile.log_g1(s); }, grid)
          .witness_value;
  return report;
}

}  // namespace carnot
