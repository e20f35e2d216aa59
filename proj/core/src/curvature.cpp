#include "spinsphere/curvature.hpp"

#include <cmath>

#include "spinsphere/detail/fields.hpp"
#include "spinsphere/spin_bundles.hpp"

namespace spinsphere {

namespace {

struct GammaWithDerivatives {
  Rank3d gamma;
  std::array<Rank3d, 4> partial;  // partial[nu] = d Gamma / d coord_nu
};

GammaWithDerivatives gamma_and_partials(FrameId f, const Point& p, const ScaleFactor& sf) {
  GammaWithDerivatives out;
  out.gamma = detail::connection_reduced<double>(f, p.coords, sf);
  for (int nu = 0; nu < 4; ++nu) {
    std::array<Dual1, 4> c{Dual1(p.coords[0]), Dual1(p.coords[1]), Dual1(p.coords[2]),
                           Dual1(p.coords[3])};
    c[nu].du = 1.0;
    Rank3<Dual1> gd = detail::connection_reduced<Dual1>(f, c, sf);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.partial[nu](k, i, j) = gd(k, i, j).du;
  }
  return out;
}

}  // namespace

Rank4d riemann(FrameId f, const Point& p, const ScaleFactor& sf) {
  if (p.chart != home_chart(f)) throw UsageError("riemann: point not in the frame's home chart");
  auto gd = gamma_and_partials(f, p, sf);
  Rank3d cc = detail::commutation<double>(f, p.coords, sf);
  Mat4d fr = detail::frame_matrix<double>(f, p.coords, sf);

  // L_{e_i}(Gamma^p_{jq}) = sum_mu F^mu_i d_mu Gamma^p_{jq}
  auto lie = [&](int i, int pp, int j, int q) {
    double s = 0.0;
    for (int mu = 0; mu < 4; ++mu) s += fr(mu, i) * gd.partial[mu](pp, j, q);
    return s;
  };

  Rank4d out;
  for (int pp = 0; pp < 4; ++pp)
    for (int q = 0; q < 4; ++q)
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          double v = lie(i, pp, j, q) - lie(j, pp, i, q);
          for (int h = 0; h < 4; ++h)
            v += gd.gamma(pp, i, h) * gd.gamma(h, j, q) - gd.gamma(pp, j, h) * gd.gamma(h, i, q);
          for (int k = 0; k < 4; ++k) v -= cc(k, i, j) * gd.gamma(pp, k, q);
          out(pp, q, i, j) = v;
          out(pp, q, j, i) = -v;
        }
  return out;
}

Rank4c spinor_curvature(FramePair pair, const Point& p, const ScaleFactor& sf) {
  FrameId f = tangent_frame(pair);
  if (p.chart != home_chart(f))
    throw UsageError("spinor_curvature: point not in the frame's home chart");
  auto gd = gamma_and_partials(f, p, sf);
  Rank3d cc = detail::commutation<double>(f, p.coords, sf);
  Mat4d fr = detail::frame_matrix<double>(f, p.coords, sf);
  SpinConnectionComponents sc = spinor_connection(pair, p, sf);

  // The gamma field is constant in these frame pairs, so the derivative of A
  // is the gamma-contraction of the derivative of Gamma.
  auto lie_a = [&](int i, int j) {
    Mat4c m;
    for (int mu = 0; mu < 4; ++mu) {
      if (fr(mu, i) == 0.0) continue;
      for (int mm = 0; mm < 4; ++mm)
        for (int nn = 0; nn < 4; ++nn) {
          double dgam = gd.partial[mu](nn, j, mm);
          if (dgam == 0.0) continue;
          double w = 0.25 * fr(mu, i) * dgam * kMinkowskiSign[mm];
          Mat4c prod = gamma_matrix(nn) * gamma_matrix(mm);
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) m(a, b) += w * prod(a, b);
        }
    }
    return m;
  };

  auto a_mat = [&](int i) {
    Mat4c m;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(a, b) = sc.a(a, i, b);
    return m;
  };

  Rank4c out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Mat4c m = lie_a(i, j) - lie_a(j, i) + a_mat(i) * a_mat(j) - a_mat(j) * a_mat(i);
      for (int k = 0; k < 4; ++k) {
        if (cc(k, i, j) == 0.0) continue;
        Mat4c ak = a_mat(k);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) m(a, b) -= cc(k, i, j) * ak(a, b);
      }
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          out(a, b, i, j) = m(a, b);
          out(a, b, j, i) = -m(a, b);
        }
    }
  return out;
}

double check_intertwining(FramePair pair, const Point& p, const ScaleFactor& sf) {
  Rank4c spin = spinor_curvature(pair, p, sf);
  Rank4d riem = riemann(tangent_frame(pair), p, sf);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mat4c m;
      for (int r = 0; r < 4; ++r)
        for (int mm = 0; mm < 4; ++mm) {
          if (riem(r, mm, i, j) == 0.0) continue;
          double w = 0.25 * riem(r, mm, i, j) * kMinkowskiSign[mm];
          Mat4c prod = gamma_matrix(r) * gamma_matrix(mm);
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) m(a, b) += w * prod(a, b);
        }
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          worst = std::max(worst, std::abs(spin(a, b, i, j) - m(a, b)));
    }
  return worst;
}

RicciScalar ricci_and_scalar(FrameId f, const Point& p, const ScaleFactor& sf) {
  Rank4d riem = riemann(f, p, sf);
  RicciScalar out;
  for (int q = 0; q < 4; ++q)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int pp = 0; pp < 4; ++pp) s += riem(pp, q, pp, j);
      out.ricci(q, j) = s;
    }
  out.scalar = 0.0;
  for (int q = 0; q < 4; ++q) out.scalar += kMinkowskiSign[q] * out.ricci(q, q);
  return out;
}

}  // namespace spinsphere
