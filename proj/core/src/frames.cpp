#include "spinsphere/frames.hpp"

#include <string>

#include "spinsphere/detail/fields.hpp"

namespace spinsphere {

const char* to_string(FrameId f) {
  switch (f) {
    case FrameId::X:
      return "x";
    case FrameId::Y:
      return "y";
    case FrameId::Ytilde:
      return "ytilde";
    case FrameId::E:
      return "e";
  }
  return "?";
}

ChartId home_chart(FrameId f) {
  switch (f) {
    case FrameId::X:
      return ChartId::north_stereo;
    case FrameId::Y:
    case FrameId::Ytilde:
      return ChartId::south_stereo;
    case FrameId::E:
    default:
      return ChartId::spherical;
  }
}

namespace {

void require_home_chart(FrameId f, const Point& p) {
  if (p.chart != home_chart(f))
    throw UsageError(std::string("frame ") + to_string(f) + " expects a point in its home chart '" +
                     to_string(home_chart(f)) + "', got '" + to_string(p.chart) + "'");
}

}  // namespace

Mat4d frame_coefficients(FrameId f, const Point& p, const ScaleFactor& sf) {
  require_home_chart(f, p);
  return detail::frame_matrix<double>(f, p.coords, sf);
}

Mat4d metric_in_frame(FrameId f, const Point& p, const ScaleFactor& sf) {
  Mat4d fr = frame_coefficients(f, p, sf);
  Mat4d g = holonomic_metric(p, sf);
  return transpose(fr) * g * fr;
}

CommutationCoefficients commutators(FrameId f, const Point& p, const ScaleFactor& sf,
                                    DiffMethod method) {
  require_home_chart(f, p);
  CommutationCoefficients out;
  if (method == DiffMethod::dual) {
    out.c = detail::commutation<double>(f, p.coords, sf);
    return out;
  }
  // central differences of the frame coefficient functions
  constexpr double h = 1e-5;
  Mat4d fr = detail::frame_matrix<double>(f, p.coords, sf);
  std::array<Mat4d, 4> dfr;
  for (int nu = 0; nu < 4; ++nu) {
    auto cp = p.coords;
    auto cm = p.coords;
    cp[nu] += h;
    cm[nu] -= h;
    Mat4d fp = detail::frame_matrix<double>(f, cp, sf);
    Mat4d fm = detail::frame_matrix<double>(f, cm, sf);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) dfr[nu](a, b) = (fp(a, b) - fm(a, b)) / (2.0 * h);
  }
  Mat4d finv = inverse(fr);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::array<double, 4> bracket{};
      for (int mu = 0; mu < 4; ++mu) {
        double s = 0.0;
        for (int nu = 0; nu < 4; ++nu)
          s += fr(nu, i) * dfr[nu](mu, j) - fr(nu, j) * dfr[nu](mu, i);
        bracket[mu] = s;
      }
      std::array<double, 4> comp = finv * bracket;
      for (int k = 0; k < 4; ++k) {
        out.c(k, i, j) = comp[k];
        out.c(k, j, i) = -comp[k];
      }
    }
  return out;
}

Mat4d frame_transition(FrameId from, FrameId to, const Point& p) {
  if (from == to) return Mat4d::identity();
  ChartId cf = home_chart(from);
  ChartId ct = home_chart(to);
  Point pf = p.chart == cf ? p : transition(p, cf);
  Point pt = p.chart == ct ? p : transition(p, ct);
  // Transitions do not depend on the scale factor: every frame column scales
  // as 1/R, so R cancels in F_to^{-1} J F_from. Evaluate with R = 1.
  static const ScaleFactor unit = ScaleFactor::constant(1.0);
  Mat4d f_from = detail::frame_matrix<double>(from, pf.coords, unit);
  Mat4d f_to = detail::frame_matrix<double>(to, pt.coords, unit);
  Mat4d j = cf == ct ? Mat4d::identity() : jacobian(pf, ct);
  return inverse(f_to) * j * f_from;
}

}  // namespace spinsphere
