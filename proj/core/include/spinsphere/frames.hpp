#pragma once

#include "spinsphere/charts.hpp"
#include "spinsphere/linalg.hpp"
#include "spinsphere/scale_factor.hpp"

namespace spinsphere {

// The four orthonormal non-holonomic frames: X (north chart), Y and its
// space-inverted partner Ytilde (south chart), E (spherical chart).
enum class FrameId { X, Y, Ytilde, E };

const char* to_string(FrameId f);
ChartId home_chart(FrameId f);

enum class DiffMethod {
  dual,                // forward-mode dual numbers (exact)
  central_difference,  // h = 1e-5 cross-check
};

// Antisymmetric in the lower index pair by construction.
struct CommutationCoefficients {
  Rank3d c;
  double& operator()(int k, int i, int j) { return c(k, i, j); }
  const double& operator()(int k, int i, int j) const { return c(k, i, j); }
};

// Columns = frame vectors in the holonomic basis of the home chart at p.
// The point must be given in the frame's home chart.
Mat4d frame_coefficients(FrameId f, const Point& p, const ScaleFactor& sf);

// F^T g F with g the holonomic metric; Minkowski for these frames.
Mat4d metric_in_frame(FrameId f, const Point& p, const ScaleFactor& sf);

// c^k_ij of [e_i, e_j] = sum_k c^k_ij e_k.
CommutationCoefficients commutators(FrameId f, const Point& p, const ScaleFactor& sf,
                                    DiffMethod method = DiffMethod::dual);

// M with (from)_i = sum_j M^j_i (to)_j. Independent of the scale factor; p
// must lie in the chart overlap of both home charts.
Mat4d frame_transition(FrameId from, FrameId to, const Point& p);

}  // namespace spinsphere
