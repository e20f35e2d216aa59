#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "spinsphere/dual.hpp"
#include "spinsphere/errors.hpp"

namespace spinsphere {

using Complex = std::complex<double>;

// Dense fixed-size square matrix over T (double, complex, or dual scalars).
template <class T, int N>
struct Mat {
  std::array<T, static_cast<std::size_t>(N) * N> a{};

  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * N + j]; }

  static Mat identity() {
    Mat m;
    for (int i = 0; i < N; ++i) m(i, i) = T(1.0);
    return m;
  }
};

using Mat4d = Mat<double, 4>;
using Mat2c = Mat<Complex, 2>;
using Mat4c = Mat<Complex, 4>;

template <class T, int N>
Mat<T, N> operator*(const Mat<T, N>& x, const Mat<T, N>& y) {
  Mat<T, N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      T s{};
      for (int k = 0; k < N; ++k) s = s + x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

template <class T, int N>
Mat<T, N> operator+(const Mat<T, N>& x, const Mat<T, N>& y) {
  Mat<T, N> r;
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <class T, int N>
Mat<T, N> operator-(const Mat<T, N>& x, const Mat<T, N>& y) {
  Mat<T, N> r;
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <class T, int N>
Mat<T, N> operator*(const T& s, const Mat<T, N>& x) {
  Mat<T, N> r;
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
  return r;
}

template <class T, int N>
std::array<T, static_cast<std::size_t>(N)> operator*(
    const Mat<T, N>& x, const std::array<T, static_cast<std::size_t>(N)>& v) {
  std::array<T, static_cast<std::size_t>(N)> r{};
  for (int i = 0; i < N; ++i) {
    T s{};
    for (int k = 0; k < N; ++k) s = s + x(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

template <class T, int N>
Mat<T, N> transpose(const Mat<T, N>& x) {
  Mat<T, N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = x(j, i);
  return r;
}

template <int N>
Mat<Complex, N> adjoint(const Mat<Complex, N>& x) {
  Mat<Complex, N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

// Pivot magnitude: leading real part for duals, modulus for complex.
inline double scalar_mag(double x) { return std::abs(x); }
inline double scalar_mag(const Complex& x) { return std::abs(x); }
template <class T>
double scalar_mag(const Dual<T>& x) {
  return scalar_mag(x.re);
}

// Gauss-Jordan inverse with partial pivoting on the leading magnitude.
template <class T, int N>
Mat<T, N> inverse(const Mat<T, N>& m) {
  Mat<T, N> a = m;
  Mat<T, N> inv = Mat<T, N>::identity();
  for (int col = 0; col < N; ++col) {
    int piv = col;
    for (int r = col + 1; r < N; ++r)
      if (scalar_mag(a(r, col)) > scalar_mag(a(piv, col))) piv = r;
    if (scalar_mag(a(piv, col)) == 0.0) throw ConditioningError("singular matrix in inverse()");
    if (piv != col)
      for (int j = 0; j < N; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    T d = a(col, col);
    for (int j = 0; j < N; ++j) {
      a(col, j) = a(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col) continue;
      T f = a(r, col);
      for (int j = 0; j < N; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

template <class T, int N>
T determinant(const Mat<T, N>& m) {
  Mat<T, N> a = m;
  T det = T(1.0);
  for (int col = 0; col < N; ++col) {
    int piv = col;
    for (int r = col + 1; r < N; ++r)
      if (scalar_mag(a(r, col)) > scalar_mag(a(piv, col))) piv = r;
    if (scalar_mag(a(piv, col)) == 0.0) return T(0.0);
    if (piv != col) {
      for (int j = 0; j < N; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det = det * a(col, col);
    for (int r = col + 1; r < N; ++r) {
      T f = a(r, col) / a(col, col);
      for (int j = col; j < N; ++j) a(r, j) = a(r, j) - f * a(col, j);
    }
  }
  return det;
}

// Minkowski matrix diag(1,-1,-1,-1); metric and dual metric in every
// orthonormal frame here.
inline Mat4d minkowski() {
  Mat4d g;
  g(0, 0) = 1.0;
  g(1, 1) = g(2, 2) = g(3, 3) = -1.0;
  return g;
}

inline constexpr std::array<double, 4> kMinkowskiSign{1.0, -1.0, -1.0, -1.0};

template <int N>
double max_abs_diff(const Mat<double, N>& x, const Mat<double, N>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

template <int N>
double max_abs_diff(const Mat<Complex, N>& x, const Mat<Complex, N>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

// Rank-3 and rank-4 component blocks over the frame index range 0..3.
template <class T>
struct Rank3 {
  std::array<T, 64> v{};
  T& operator()(int k, int i, int j) { return v[static_cast<std::size_t>((k * 4 + i) * 4 + j)]; }
  const T& operator()(int k, int i, int j) const {
    return v[static_cast<std::size_t>((k * 4 + i) * 4 + j)];
  }
};

template <class T>
struct Rank4 {
  std::array<T, 256> v{};
  T& operator()(int p, int q, int i, int j) {
    return v[static_cast<std::size_t>(((p * 4 + q) * 4 + i) * 4 + j)];
  }
  const T& operator()(int p, int q, int i, int j) const {
    return v[static_cast<std::size_t>(((p * 4 + q) * 4 + i) * 4 + j)];
  }
};

using Rank3d = Rank3<double>;
using Rank3c = Rank3<Complex>;
using Rank4d = Rank4<double>;
using Rank4c = Rank4<Complex>;

}  // namespace spinsphere
