#pragma once

// Closed-form chart and frame evaluators templated on the scalar type, so the
// same expressions serve plain evaluation, dual-number first derivatives, and
// nested-dual second derivatives.

#include <array>
#include <string>

#include "spinsphere/charts.hpp"
#include "spinsphere/dual.hpp"
#include "spinsphere/errors.hpp"
#include "spinsphere/frames.hpp"
#include "spinsphere/linalg.hpp"
#include "spinsphere/scale_factor.hpp"

namespace spinsphere::detail {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

template <class T>
T spatial_norm2(const std::array<T, 4>& c) {
  return c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
}

template <class T>
void require_off_pole(const std::array<T, 4>& c, const char* what) {
  if (real_part(spatial_norm2(c)) < kPoleTolerance * kPoleTolerance)
    throw ChartDomainError(std::string(what) + ": point at a stereographic pole (|spatial| < 1e-13)");
}

// chi and theta must lie in (0, pi), bounded away from the excluded axis set.
template <class T>
void require_spherical_domain(const std::array<T, 4>& c, const char* what) {
  using std::sin;
  double chi = real_part(c[1]);
  double theta = real_part(c[2]);
  if (!(chi > 0.0 && chi < kPi) || std::sin(chi) < kPoleTolerance)
    throw ChartDomainError(std::string(what) + ": chi outside (0, pi) or at a pole");
  if (!(theta > 0.0 && theta < kPi) || std::sin(theta) < kPoleTolerance)
    throw ChartDomainError(std::string(what) + ": theta outside (0, pi) or on the axis");
}

template <class T>
std::array<T, 4> stereo_to_stereo(const std::array<T, 4>& c) {
  require_off_pole(c, "stereographic transition");
  T n2 = spatial_norm2(c);
  return {c[0], c[1] / n2, c[2] / n2, c[3] / n2};
}

// phi = atan2(first spatial coordinate, second), wrapped into [0, 2*pi).
template <class T>
T wrap_phi(const T& phi) {
  if (real_part(phi) < 0.0) return phi + 2.0 * kPi;
  return phi;
}

template <class T>
std::array<T, 4> stereo_to_spherical(const std::array<T, 4>& c, bool from_north) {
  using std::acos;
  using std::atan2;
  using std::sqrt;
  require_off_pole(c, "transition to spherical");
  T rho2 = c[1] * c[1] + c[2] * c[2];
  if (real_part(rho2) < kPoleTolerance * kPoleTolerance)
    throw ChartDomainError("transition to spherical: point on the excluded axis (sin(theta) = 0)");
  T n2 = spatial_norm2(c);
  T w = from_north ? (n2 - 1.0) / (n2 + 1.0) : (1.0 - n2) / (1.0 + n2);
  T chi = acos(w);
  T theta = acos(c[3] / sqrt(n2));
  T phi = wrap_phi(atan2(c[1], c[2]));
  return {c[0], chi, theta, phi};
}

template <class T>
std::array<T, 4> spherical_to_stereo(const std::array<T, 4>& c, bool to_north) {
  using std::cos;
  using std::sin;
  require_spherical_domain(c, "transition from spherical");
  T s = sin(c[1]);
  T denom = to_north ? 1.0 - cos(c[1]) : 1.0 + cos(c[1]);
  T a = s * sin(c[2]) * sin(c[3]) / denom;
  T b = s * sin(c[2]) * cos(c[3]) / denom;
  T d = s * cos(c[2]) / denom;
  return {c[0], a, b, d};
}

template <class T>
std::array<T, 4> transition_coords(ChartId from, ChartId to, const std::array<T, 4>& c) {
  if (from == to) return c;
  switch (from) {
    case ChartId::north_stereo:
      return to == ChartId::south_stereo ? stereo_to_stereo(c) : stereo_to_spherical(c, true);
    case ChartId::south_stereo:
      return to == ChartId::north_stereo ? stereo_to_stereo(c) : stereo_to_spherical(c, false);
    case ChartId::spherical:
    default:
      return spherical_to_stereo(c, to == ChartId::north_stereo);
  }
}

template <class T>
Mat<T, 4> holonomic_metric_matrix(ChartId chart, const std::array<T, 4>& c,
                                  const ScaleFactor& sf) {
  using std::sin;
  T r = sf.radius(c[0]);
  Mat<T, 4> g;
  g(0, 0) = r * r;
  if (chart == ChartId::spherical) {
    require_spherical_domain(c, "holonomic metric");
    T s1 = sin(c[1]);
    T s2 = sin(c[2]);
    g(1, 1) = -(r * r);
    g(2, 2) = -(r * r * s1 * s1);
    g(3, 3) = -(r * r * s1 * s1 * s2 * s2);
  } else {
    T f = (1.0 + spatial_norm2(c));
    T val = 4.0 * r * r / (f * f);
    g(1, 1) = g(2, 2) = g(3, 3) = -val;
  }
  return g;
}

// Columns are the orthonormal frame vectors in the holonomic basis of the
// frame's home chart.
template <class T>
Mat<T, 4> frame_matrix(FrameId f, const std::array<T, 4>& c, const ScaleFactor& sf) {
  using std::sin;
  T r = sf.radius(c[0]);
  Mat<T, 4> m;
  m(0, 0) = 1.0 / r;
  switch (f) {
    case FrameId::X:
    case FrameId::Y: {
      T h = (1.0 + spatial_norm2(c)) / (2.0 * r);
      m(1, 1) = m(2, 2) = m(3, 3) = h;
      break;
    }
    case FrameId::Ytilde: {
      T h = (1.0 + spatial_norm2(c)) / (2.0 * r);
      m(1, 1) = m(2, 2) = m(3, 3) = -h;
      break;
    }
    case FrameId::E: {
      require_spherical_domain(c, "frame coefficients");
      T s1 = sin(c[1]);
      T s2 = sin(c[2]);
      m(1, 1) = 1.0 / r;
      m(2, 2) = 1.0 / (r * s1);
      m(3, 3) = 1.0 / (r * s1 * s2);
      break;
    }
  }
  return m;
}

// c^k_ij with [e_i, e_j] = sum_k c^k_ij e_k, from dual-number derivatives of
// the frame coefficient functions. Stored antisymmetrized exactly.
template <class T>
Rank3<T> commutation(FrameId f, const std::array<T, 4>& c, const ScaleFactor& sf) {
  using D = Dual<T>;
  Mat<T, 4> fr = frame_matrix<T>(f, c, sf);
  std::array<Mat<T, 4>, 4> dfr;  // dfr[nu](mu, j) = d F^mu_j / d coord_nu
  for (int nu = 0; nu < 4; ++nu) {
    std::array<D, 4> cd{D(c[0], T{}), D(c[1], T{}), D(c[2], T{}), D(c[3], T{})};
    cd[nu].du = T(1.0);
    Mat<D, 4> fd = frame_matrix<D>(f, cd, sf);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) dfr[nu](a, b) = fd(a, b).du;
  }
  Mat<T, 4> finv = inverse(fr);
  Rank3<T> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::array<T, 4> bracket{};
      for (int mu = 0; mu < 4; ++mu) {
        T s{};
        for (int nu = 0; nu < 4; ++nu)
          s = s + fr(nu, i) * dfr[nu](mu, j) - fr(nu, j) * dfr[nu](mu, i);
        bracket[mu] = s;
      }
      std::array<T, 4> comp = finv * bracket;
      for (int k = 0; k < 4; ++k) {
        out(k, i, j) = comp[k];
        out(k, j, i) = -comp[k];
      }
    }
  return out;
}

// Metric-connection components in an orthonormal frame, where the frame
// metric is the constant Minkowski matrix: built from the commutation
// coefficients alone. First lower index is the differentiation direction.
template <class T>
Rank3<T> connection_reduced(FrameId f, const std::array<T, 4>& c, const ScaleFactor& sf) {
  Rank3<T> cc = commutation<T>(f, c, sf);
  Rank3<T> g;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        g(k, i, j) = 0.5 * cc(k, i, j) - 0.5 * kMinkowskiSign[k] * kMinkowskiSign[j] * cc(j, i, k) -
                     0.5 * kMinkowskiSign[k] * kMinkowskiSign[i] * cc(i, j, k);
  return g;
}

}  // namespace spinsphere::detail
