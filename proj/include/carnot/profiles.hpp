#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace carnot {

/// Radial potential g with closed-form derivatives. The log_* accessors
/// evaluate log g, log g', log g'' analytically so that growth checks on
/// wide grids never overflow (cosh-type profiles exceed double range well
/// before s = 1e3).
struct GProfile {
  enum class Kind { power, cosh_power, power_log, alpha_power };

  Kind kind = Kind::power;
  double k = 0.0;      // exponent, first three kinds
  double p = 0.0;      // alpha_power exponent
  double alpha = 0.0;  // alpha_power weight

  static GProfile power(double k);        // g = s^k, k >= 1
  static GProfile cosh_power(double k);   // g = cosh(s^k), k >= 1
  static GProfile power_log(double k);    // g = s^k log(s+1), k >= 1
  static GProfile alpha_power(double p, double alpha);  // g = alpha s^p

  double g(double s) const;
  double g1(double s) const;
  double g2(double s) const;

  double log_g(double s) const;   // s > 0
  double log_g1(double s) const;  // -inf where g' = 0
  double log_g2(double s) const;  // -inf where g'' <= 0

  std::string label() const;
};

/// 200 log-spaced points on [1, 1e3].
std::vector<double> default_condition_grid();

using LogFn = std::function<double(double)>;

struct GridVerdict {
  bool ok = false;
  double witness_s = 0.0;     // max-violating / extremal grid point
  double witness_value = 0.0; // margin or slope at the witness
};

/// g''(s) <= g'(s)^3 s^3 at every grid point, compared in log space.
/// The callable form is the general path; the GProfile overload wires in
/// the profile's analytic logs.
GridVerdict grid_theorem1(const LogFn& log_g1, const LogFn& log_g2,
                          std::span<const double> grid);
GridVerdict check_theorem1_condition(const GProfile& profile);
GridVerdict check_theorem1_condition(const GProfile& profile,
                                     std::span<const double> grid);

/// Least-squares slope of value(s) against log s over the last decade of
/// the grid.
double last_decade_slope(const LogFn& value, std::span<const double> grid);

/// Grid heuristic for g'(s)/s^2 -> infinity: positive last-decade slope of
/// log eta and a terminal value above log(10).
GridVerdict grid_eta_unbounded(const LogFn& log_g1, std::span<const double> grid);

/// Closed-form verdict per kind (power: k > 3, power_log: k >= 3,
/// cosh_power: always, alpha_power: p > 3).
bool check_eta_unbounded(const GProfile& profile);

/// g'(s) >= 0 on the grid.
bool check_g_increasing(const GProfile& profile, std::span<const double> grid);

struct ConditionReport {
  bool theorem1_ok = false;
  bool eta_unbounded = false;
  bool t11_gprime_increasing = false;
  bool t11_g_power_bound = false;
  bool t11_gpp_bound = false;
  double beta = 0.0;
  double theorem1_witness_s = 0.0;
  double theorem1_margin = 0.0;     // max of log g'' - 3 log g' - 3 log s
  double eta_slope = 0.0;           // last-decade slope of log eta
  double power_bound_slope = 0.0;   // slope of log[g (s^2/g')^{1/beta}]
  double power_bound_sup_log = 0.0; // grid sup of the same quantity (log)
  double gpp_slope = 0.0;           // slope of log[g''/g'^2]
};

/// The three Theorem-11-style conditions at the given beta in (0, 1]:
/// g' nondecreasing, g <= (c g'/s^2)^{1/beta} bounded, g'' < d g'^2.
ConditionReport check_theorem11_conditions(const GProfile& profile, double beta);

/// Full report: theorem-1 growth condition, eta unboundedness, and the
/// Theorem-11 bundle.
ConditionReport make_condition_report(const GProfile& profile, double beta);

}  // namespace carnot
