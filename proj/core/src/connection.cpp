#include "spinsphere/connection.hpp"

#include "spinsphere/detail/fields.hpp"
#include "spinsphere/spin_bundles.hpp"

namespace spinsphere {

const char* to_string(FramePair pair) {
  switch (pair) {
    case FramePair::psi_x:
      return "x";
    case FramePair::phi_y:
      return "y";
    case FramePair::xi_e:
      return "e";
  }
  return "?";
}

FrameId tangent_frame(FramePair pair) {
  switch (pair) {
    case FramePair::psi_x:
      return FrameId::X;
    case FramePair::phi_y:
      return FrameId::Y;
    case FramePair::xi_e:
    default:
      return FrameId::E;
  }
}

FramePair frame_pair_of(FrameId tangent) {
  switch (tangent) {
    case FrameId::X:
      return FramePair::psi_x;
    case FrameId::Y:
      return FramePair::phi_y;
    case FrameId::E:
      return FramePair::xi_e;
    case FrameId::Ytilde:
    default:
      throw UsageError("no associated frame pair is defined over the ytilde tangent frame");
  }
}

Rank3d gamma_special(FrameId f, const Point& p, const ScaleFactor& sf) {
  if (p.chart != home_chart(f))
    throw UsageError("gamma_special: point not in the frame's home chart");
  return detail::connection_reduced<double>(f, p.coords, sf);
}

Rank3d gamma_general(FrameId f, const Point& p, const ScaleFactor& sf) {
  if (p.chart != home_chart(f))
    throw UsageError("gamma_general: point not in the frame's home chart");

  Rank3d cc = detail::commutation<double>(f, p.coords, sf);
  Mat4d fr = detail::frame_matrix<double>(f, p.coords, sf);
  Mat4d gm = transpose(fr) * detail::holonomic_metric_matrix<double>(p.chart, p.coords, sf) * fr;
  Mat4d gi = inverse(gm);

  // partials of the frame metric, then Lie derivatives along frame vectors
  std::array<Mat4d, 4> dg;
  for (int nu = 0; nu < 4; ++nu) {
    std::array<Dual1, 4> c{Dual1(p.coords[0]), Dual1(p.coords[1]), Dual1(p.coords[2]),
                           Dual1(p.coords[3])};
    c[nu].du = 1.0;
    Mat<Dual1, 4> frd = detail::frame_matrix<Dual1>(f, c, sf);
    Mat<Dual1, 4> gd =
        transpose(frd) * detail::holonomic_metric_matrix<Dual1>(p.chart, c, sf) * frd;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) dg[nu](a, b) = gd(a, b).du;
  }
  auto lie_g = [&](int i, int a, int b) {
    double s = 0.0;
    for (int mu = 0; mu < 4; ++mu) s += fr(mu, i) * dg[mu](a, b);
    return s;
  };

  Rank3d out;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double v = 0.0;
        for (int r = 0; r < 4; ++r)
          v += 0.5 * gi(k, r) * (lie_g(i, r, j) + lie_g(j, i, r) - lie_g(r, i, j));
        v += 0.5 * cc(k, i, j);
        for (int r = 0; r < 4; ++r)
          for (int s = 0; s < 4; ++s)
            v -= 0.5 * cc(s, i, r) * gi(k, r) * gm(s, j) + 0.5 * cc(s, j, r) * gi(k, r) * gm(s, i);
        out(k, i, j) = v;
      }
  return out;
}

SpinConnectionComponents spinor_connection(FramePair pair, const Point& p, const ScaleFactor& sf) {
  Rank3d g = gamma_special(tangent_frame(pair), p, sf);

  // A_i = (1/4) sum_{m,n,s} Gamma^n_{is} g^{ms} gamma_n gamma_m, written as a
  // direct four-fold summation over the component indices.
  SpinConnectionComponents out;
  for (int i = 0; i < 4; ++i) {
    Mat4c acc;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        for (int s = 0; s < 4; ++s) {
          if (s != m || g(n, i, s) == 0.0) continue;  // g^{ms} diagonal
          double w = 0.25 * g(n, i, s) * kMinkowskiSign[m];
          Mat4c prod = gamma_matrix(n) * gamma_matrix(m);
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) acc(a, b) += w * prod(a, b);
        }
      }
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        out.a(a, i, b) = acc(a, b);
        out.a_bar(a, i, b) = std::conj(acc(a, b));
      }
  }
  return out;
}

}  // namespace spinsphere
