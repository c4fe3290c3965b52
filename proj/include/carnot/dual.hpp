#pragma once

#include <cmath>
#include <type_traits>

namespace carnot {

/// Forward-mode scalar: value plus one derivative slot. Nest as
/// Dual<Dual<double>> for exact second derivatives.
template <typename T>
struct Dual {
  T v{};  // value
  T d{};  // derivative

  constexpr Dual() = default;
  constexpr Dual(double value) : v(value), d() {}  // NOLINT: implicit on purpose
  constexpr Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}
};

using D1 = Dual<double>;
using D2 = Dual<Dual<double>>;

inline double scalar_value(double x) { return x; }
template <typename T>
double scalar_value(const Dual<T>& x) {
  return scalar_value(x.v);
}

template <typename T>
constexpr Dual<T> operator-(const Dual<T>& a) {
  return {-a.v, -a.d};
}

template <typename T>
constexpr Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.v + b.v, a.d + b.d};
}
template <typename T>
constexpr Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.v - b.v, a.d - b.d};
}
template <typename T>
constexpr Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}
template <typename T>
constexpr Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  const T q = a.v / b.v;
  return {q, (a.d - q * b.d) / b.v};
}

template <typename T>
constexpr Dual<T> operator+(const Dual<T>& a, double b) {
  return {a.v + b, a.d};
}
template <typename T>
constexpr Dual<T> operator+(double a, const Dual<T>& b) {
  return b + a;
}
template <typename T>
constexpr Dual<T> operator-(const Dual<T>& a, double b) {
  return {a.v - b, a.d};
}
template <typename T>
constexpr Dual<T> operator-(double a, const Dual<T>& b) {
  return {a - b.v, -b.d};
}
template <typename T>
constexpr Dual<T> operator*(const Dual<T>& a, double b) {
  return {a.v * b, a.d * b};
}
template <typename T>
constexpr Dual<T> operator*(double a, const Dual<T>& b) {
  return b * a;
}
template <typename T>
constexpr Dual<T> operator/(const Dual<T>& a, double b) {
  return {a.v / b, a.d / b};
}
template <typename T>
constexpr Dual<T> operator/(double a, const Dual<T>& b) {
  return Dual<T>(a) / b;
}

template <typename T>
Dual<T>& operator+=(Dual<T>& a, const Dual<T>& b) {
  a = a + b;
  return a;
}
template <typename T>
Dual<T>& operator*=(Dual<T>& a, const Dual<T>& b) {
  a = a * b;
  return a;
}

template <typename T>
bool operator<(const Dual<T>& a, const Dual<T>& b) {
  return scalar_value(a) < scalar_value(b);
}
template <typename T>
bool operator<(const Dual<T>& a, double b) {
  return scalar_value(a) < b;
}
template <typename T>
bool operator>(const Dual<T>& a, double b) {
  return scalar_value(a) > b;
}

using std::abs;
using std::cosh;
using std::exp;
using std::log;
using std::log1p;
using std::pow;
using std::sinh;
using std::sqrt;

template <typename T>
Dual<T> sqrt(const Dual<T>& a) {
  const T r = sqrt(a.v);
  return {r, a.d / (2.0 * r)};
}

template <typename T>
Dual<T> exp(const Dual<T>& a) {
  const T e = exp(a.v);
  return {e, a.d * e};
}

template <typename T>
Dual<T> log(const Dual<T>& a) {
  return {log(a.v), a.d / a.v};
}

template <typename T>
Dual<T> log1p(const Dual<T>& a) {
  return {log1p(a.v), a.d / (1.0 + a.v)};
}

template <typename T>
Dual<T> sinh(const Dual<T>& a) {
  return {sinh(a.v), a.d * cosh(a.v)};
}

template <typename T>
Dual<T> cosh(const Dual<T>& a) {
  return {cosh(a.v), a.d * sinh(a.v)};
}

/// x^c for constant exponent c.
template <typename T>
Dual<T> pow(const Dual<T>& a, double c) {
  return {pow(a.v, c), c * pow(a.v, c - 1.0) * a.d};
}

template <typename T>
Dual<T> abs(const Dual<T>& a) {
  return scalar_value(a) < 0.0 ? -a : a;
}

// Branch by value; derivative follows the selected branch.
template <typename T>
Dual<T> fmax(const Dual<T>& a, double b) {
  return scalar_value(a) >= b ? a : Dual<T>(b);
}
template <typename T>
Dual<T> fmin(const Dual<T>& a, double b) {
  return scalar_value(a) <= b ? a : Dual<T>(b);
}

}  // namespace carnot
