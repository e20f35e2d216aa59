#pragma once

#include <cmath>

namespace spinsphere {

// Forward-mode dual number a + b*eps with eps^2 = 0. Nesting
// Dual<Dual<double>> gives exact second derivatives.
template <class T>
struct Dual {
  T re{};
  T du{};

  constexpr Dual() = default;
  constexpr Dual(double v) : re(v), du() {}  // NOLINT: implicit by design
  constexpr Dual(T r, T d) : re(r), du(d) {}
};

using Dual1 = Dual<double>;
using Dual2 = Dual<Dual<double>>;

// Leading real part, through any nesting depth.
inline double real_part(double x) { return x; }
template <class T>
double real_part(const Dual<T>& x) {
  return real_part(x.re);
}

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.re + b.re, a.du + b.du};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.re - b.re, a.du - b.du};
}
template <class T>
Dual<T> operator-(const Dual<T>& a) {
  return {-a.re, -a.du};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.re * b.re, a.re * b.du + a.du * b.re};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  T inv = T(1.0) / b.re;
  return {a.re * inv, (a.du - a.re * b.du * inv) * inv};
}

template <class T>
Dual<T> operator+(const Dual<T>& a, double b) {
  return {a.re + T(b), a.du};
}
template <class T>
Dual<T> operator+(double a, const Dual<T>& b) {
  return b + a;
}
template <class T>
Dual<T> operator-(const Dual<T>& a, double b) {
  return {a.re - T(b), a.du};
}
template <class T>
Dual<T> operator-(double a, const Dual<T>& b) {
  return {T(a) - b.re, -b.du};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, double b) {
  return {a.re * T(b), a.du * T(b)};
}
template <class T>
Dual<T> operator*(double a, const Dual<T>& b) {
  return b * a;
}
template <class T>
Dual<T> operator/(const Dual<T>& a, double b) {
  return {a.re / T(b), a.du / T(b)};
}
template <class T>
Dual<T> operator/(double a, const Dual<T>& b) {
  return Dual<T>(a) / b;
}

template <class T>
Dual<T> sin(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {sin(x.re), cos(x.re) * x.du};
}
template <class T>
Dual<T> cos(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {cos(x.re), -sin(x.re) * x.du};
}
template <class T>
Dual<T> sinh(const Dual<T>& x) {
  using std::cosh;
  using std::sinh;
  return {sinh(x.re), cosh(x.re) * x.du};
}
template <class T>
Dual<T> cosh(const Dual<T>& x) {
  using std::cosh;
  using std::sinh;
  return {cosh(x.re), sinh(x.re) * x.du};
}
template <class T>
Dual<T> exp(const Dual<T>& x) {
  using std::exp;
  T e = exp(x.re);
  return {e, e * x.du};
}
template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  using std::sqrt;
  T r = sqrt(x.re);
  return {r, x.du / (2.0 * r)};
}
template <class T>
Dual<T> acos(const Dual<T>& x) {
  using std::acos;
  using std::sqrt;
  return {acos(x.re), -x.du / sqrt(1.0 - x.re * x.re)};
}
template <class T>
Dual<T> atan2(const Dual<T>& y, const Dual<T>& x) {
  using std::atan2;
  T denom = x.re * x.re + y.re * y.re;
  return {atan2(y.re, x.re), (x.re * y.du - y.re * x.du) / denom};
}

}  // namespace spinsphere
