#pragma once

#include <vector>

#include "spinsphere/linalg.hpp"

namespace spinsphere {

// Index signature of a spin-tensorial component array: counts of upper/lower
// spinor, upper/lower conjugate-spinor, and upper/lower spatial indices.
struct SpinTensorType {
  int spinor_up{};
  int spinor_down{};
  int conj_up{};
  int conj_down{};
  int space_up{};
  int space_down{};

  int spin_slots() const { return spinor_up + spinor_down + conj_up + conj_down; }
  int space_slots() const { return space_up + space_down; }
  bool operator==(const SpinTensorType&) const = default;
};

// Dense multi-index complex component array. Axis order: upper spinor, lower
// spinor, upper conjugate, lower conjugate, upper spatial, lower spatial.
// Spinor axes range over spin_dim (2 for the two-component bundle, 4 for the
// four-component one); spatial axes over 0..3.
struct SpinTensorComponents {
  SpinTensorType type;
  int spin_dim{2};
  std::vector<Complex> values;

  int rank() const { return type.spin_slots() + type.space_slots(); }
  int axis_dim(int axis) const { return axis < type.spin_slots() ? spin_dim : 4; }
  std::size_t size() const;
  std::size_t flat_index(const std::vector<int>& idx) const;
  Complex& at(const std::vector<int>& idx);
  const Complex& at(const std::vector<int>& idx) const;

  static SpinTensorComponents zeros(SpinTensorType t, int spin_dim);
};

enum class BasicFieldId { d2, d4, H, D, G, gamma };
enum class FieldVariant { standard, opposite };

// Canonical constant component arrays of the basic fields.
SpinTensorComponents basic_field(BasicFieldId id, FieldVariant variant = FieldVariant::standard);

// The four-component gamma field as four 4x4 matrices, gamma_q = gamma(q).
Mat4c gamma_matrix(int q);

// Extension of a two-component frame transition to the four-component
// bundle: s on the chiral block, (s^dag)^-1 on the antichiral block (they
// coincide for unitary s).
Mat4c chiral_extension(const Mat2c& s);

// Frame relabeling (1<->3, 2<->4): column permutation by the block swap.
// Applying it twice restores the original order.
Mat4c p_reversion(const Mat4c& t);

// General component transformation under a frame change with transition
// matrix `spin` (new spinor frame in the old) and `lorentz` (new tangent
// frame in the old). Upper indices contract with the inverse, lower with the
// matrix itself; conjugate indices with complex conjugates.
SpinTensorComponents transform(const SpinTensorComponents& c, const Mat4c& spin,
                               const Mat4d& lorentz);
SpinTensorComponents transform(const SpinTensorComponents& c, const Mat2c& spin,
                               const Mat4d& lorentz);

enum class FramePairClass {
  canon_chiral,
  p_reverse_antichiral,
  t_reverse_antichiral,
  pt_reverse_chiral,
};

const char* to_string(FramePairClass c);

// Classify a Dirac frame pair from the signs of its metric, chirality, and
// pairing component arrays relative to the canonical forms.
FramePairClass classify_frame_pair(const SpinTensorComponents& d_rep,
                                   const SpinTensorComponents& h_rep,
                                   const SpinTensorComponents& pairing_rep);

}  // namespace spinsphere
