#pragma once

#include "spinsphere/connection.hpp"
#include "spinsphere/linalg.hpp"

namespace spinsphere {

// Riemannian curvature components R^p_qij in a non-holonomic frame; the Lie
// derivatives of Gamma come from nested dual numbers. Antisymmetric in (i,j).
Rank4d riemann(FrameId f, const Point& p, const ScaleFactor& sf);

// Curvature of the spinor extension of the connection.
Rank4c spinor_curvature(FramePair pair, const Point& p, const ScaleFactor& sf);

// Max absolute residual of the gamma-intertwining relation between the
// spinor curvature and the Riemann tensor, over all index tuples.
double check_intertwining(FramePair pair, const Point& p, const ScaleFactor& sf);

struct RicciScalar {
  Mat4d ricci;    // R_qj = sum_p R^p_{q p j}; diagonal for this geometry
  double scalar;  // g^{qj} R_qj
};

RicciScalar ricci_and_scalar(FrameId f, const Point& p, const ScaleFactor& sf);

}  // namespace spinsphere
