#pragma once

#include <array>

#include "spinsphere/linalg.hpp"
#include "spinsphere/scale_factor.hpp"

namespace spinsphere {

// The three local charts on R x S^3: the two stereographic projections from
// diametrically opposite poles and the angular chart (eta, chi, theta, phi).
enum class ChartId { north_stereo, south_stereo, spherical };

const char* to_string(ChartId c);

// A point is excluded from chart-overlap operations when the relevant norm
// (|x|, |y|, sin(chi), sin(theta)) falls below this.
inline constexpr double kPoleTolerance = 1e-13;

struct Point {
  ChartId chart{ChartId::north_stereo};
  std::array<double, 4> coords{};  // time coordinate first, shared by all charts
};

struct EmbeddedPoint {
  std::array<double, 4> z{};
  double radius{};
};

// Same event in the target chart's coordinates; the time coordinate is
// preserved and a spherical phi output is normalized into [0, 2*pi).
Point transition(const Point& p, ChartId target);

// Position on the sphere of radius R(p^0) in R^4.
EmbeddedPoint embed(const Point& p, const ScaleFactor& sf);

// Diagonal metric of signature (+,-,-,-) in the chart's holonomic basis.
Mat4d holonomic_metric(const Point& p, const ScaleFactor& sf);

// d(target coordinates)/d(source coordinates) at p; identity when target is
// the source chart.
Mat4d jacobian(const Point& p, ChartId target);

}  // namespace spinsphere
