#pragma once

#include "spinsphere/charts.hpp"
#include "spinsphere/frames.hpp"
#include "spinsphere/linalg.hpp"
#include "spinsphere/scale_factor.hpp"

namespace spinsphere {

// The three canonically associated frame pairs the connection is computed in:
// the chiral pair over X, the P-reversed pair over Y, and the chiral pair
// over E. Named by their tangent frames below.
enum class FramePair { psi_x, phi_y, xi_e };

const char* to_string(FramePair pair);
FrameId tangent_frame(FramePair pair);
FramePair frame_pair_of(FrameId tangent);  // UsageError for Ytilde

// Levi-Civita connection components in the given frame, Gamma^k_ij with i the
// differentiation direction. The general form keeps the Lie-derivative terms
// of the frame metric; they vanish identically for these orthonormal frames.
Rank3d gamma_general(FrameId f, const Point& p, const ScaleFactor& sf);

// Reduced form valid in orthonormal frames: commutation coefficients against
// the constant Minkowski metric.
Rank3d gamma_special(FrameId f, const Point& p, const ScaleFactor& sf);

struct SpinConnectionComponents {
  Rank3c a;      // A^alpha_{i beta}: (alpha, i, beta)
  Rank3c a_bar;  // entrywise complex conjugate of a
};

// Spinor components of the metric connection in a canonically associated
// frame pair, from its Gamma block and the constant gamma field.
SpinConnectionComponents spinor_connection(FramePair pair, const Point& p, const ScaleFactor& sf);

}  // namespace spinsphere
