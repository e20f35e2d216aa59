#include "spinsphere/charts.hpp"

#include <cmath>

#include "spinsphere/detail/fields.hpp"

namespace spinsphere {

const char* to_string(ChartId c) {
  switch (c) {
    case ChartId::north_stereo:
      return "north";
    case ChartId::south_stereo:
      return "south";
    case ChartId::spherical:
      return "spherical";
  }
  return "?";
}

Point transition(const Point& p, ChartId target) {
  return {target, detail::transition_coords<double>(p.chart, target, p.coords)};
}

EmbeddedPoint embed(const Point& p, const ScaleFactor& sf) {
  double r = sf.evaluate(p.coords[0]).value;
  EmbeddedPoint out;
  out.radius = r;
  const auto& c = p.coords;
  switch (p.chart) {
    case ChartId::north_stereo:
    case ChartId::south_stereo: {
      double n2 = detail::spatial_norm2(c);
      double f = 2.0 * r / (n2 + 1.0);
      out.z = {f * c[1], f * c[2], f * c[3], r * (n2 - 1.0) / (n2 + 1.0)};
      if (p.chart == ChartId::south_stereo) out.z[3] = -out.z[3];
      break;
    }
    case ChartId::spherical: {
      detail::require_spherical_domain(c, "embed");
      double s1 = std::sin(c[1]);
      out.z = {r * s1 * std::sin(c[2]) * std::sin(c[3]), r * s1 * std::sin(c[2]) * std::cos(c[3]),
               r * s1 * std::cos(c[2]), r * std::cos(c[1])};
      break;
    }
  }
  return out;
}

Mat4d holonomic_metric(const Point& p, const ScaleFactor& sf) {
  return detail::holonomic_metric_matrix<double>(p.chart, p.coords, sf);
}

Mat4d jacobian(const Point& p, ChartId target) {
  if (target == p.chart) return Mat4d::identity();
  Mat4d j;
  for (int nu = 0; nu < 4; ++nu) {
    std::array<Dual1, 4> c{Dual1(p.coords[0]), Dual1(p.coords[1]), Dual1(p.coords[2]),
                           Dual1(p.coords[3])};
    c[nu].du = 1.0;
    auto out = detail::transition_coords<Dual1>(p.chart, target, c);
    for (int mu = 0; mu < 4; ++mu) j(mu, nu) = out[mu].du;
  }
  return j;
}

}  // namespace spinsphere
