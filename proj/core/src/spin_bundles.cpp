#include "spinsphere/spin_bundles.hpp"

#include <cmath>
#include <string>

#include "spinsphere/errors.hpp"

namespace spinsphere {

std::size_t SpinTensorComponents::size() const {
  std::size_t n = 1;
  for (int a = 0; a < rank(); ++a) n *= static_cast<std::size_t>(axis_dim(a));
  return n;
}

std::size_t SpinTensorComponents::flat_index(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != rank())
    throw UsageError("component index rank mismatch: got " + std::to_string(idx.size()) +
                     ", want " + std::to_string(rank()));
  std::size_t f = 0;
  for (int a = 0; a < rank(); ++a) {
    int d = axis_dim(a);
    if (idx[a] < 0 || idx[a] >= d) throw UsageError("component index out of range");
    f = f * static_cast<std::size_t>(d) + static_cast<std::size_t>(idx[a]);
  }
  return f;
}

Complex& SpinTensorComponents::at(const std::vector<int>& idx) { return values[flat_index(idx)]; }
const Complex& SpinTensorComponents::at(const std::vector<int>& idx) const {
  return values[flat_index(idx)];
}

SpinTensorComponents SpinTensorComponents::zeros(SpinTensorType t, int spin_dim) {
  SpinTensorComponents c;
  c.type = t;
  c.spin_dim = spin_dim;
  c.values.assign([&] {
    std::size_t n = 1;
    int spin_slots = t.spin_slots();
    for (int a = 0; a < spin_slots + t.space_slots(); ++a)
      n *= static_cast<std::size_t>(a < spin_slots ? spin_dim : 4);
    return n;
  }(), Complex(0.0));
  return c;
}

namespace {

const Complex kI(0.0, 1.0);

SpinTensorComponents from_matrix4(SpinTensorType t, const Mat4c& m) {
  auto c = SpinTensorComponents::zeros(t, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.at({i, j}) = m(i, j);
  return c;
}

Mat4c d4_canonical() {
  Mat4c d;
  d(0, 1) = 1.0;
  d(1, 0) = -1.0;
  d(2, 3) = -1.0;
  d(3, 2) = 1.0;
  return d;
}

Mat4c h_canonical() {
  Mat4c h;
  h(0, 0) = h(1, 1) = 1.0;
  h(2, 2) = h(3, 3) = -1.0;
  return h;
}

Mat4c pairing_canonical() {
  Mat4c d;
  d(0, 2) = d(1, 3) = 1.0;
  d(2, 0) = d(3, 1) = 1.0;
  return d;
}

const Mat2c& pauli2(int q) {
  static const std::array<Mat2c, 4> s = [] {
    std::array<Mat2c, 4> m{};
    m[0](0, 0) = m[0](1, 1) = 1.0;
    m[1](0, 1) = m[1](1, 0) = 1.0;
    m[2](0, 1) = -kI;
    m[2](1, 0) = kI;
    m[3](0, 0) = 1.0;
    m[3](1, 1) = -1.0;
    return m;
  }();
  return s[q];
}

}  // namespace

Mat4c gamma_matrix(int q) {
  static const std::array<Mat4c, 4> g = [] {
    std::array<Mat4c, 4> m{};
    // off-diagonal 2x2 blocks: top-right sigma_q, bottom-left sigma_q with
    // the spatial ones negated
    for (int q_ = 0; q_ < 4; ++q_)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          m[q_](i, 2 + j) = pauli2(q_)(i, j);
          m[q_](2 + i, j) = (q_ == 0 ? 1.0 : -1.0) * pauli2(q_)(i, j);
        }
    return m;
  }();
  if (q < 0 || q > 3) throw UsageError("gamma_matrix: spatial index out of range");
  return g[q];
}

SpinTensorComponents basic_field(BasicFieldId id, FieldVariant variant) {
  SpinTensorComponents c;
  switch (id) {
    case BasicFieldId::d2: {
      c = SpinTensorComponents::zeros({.spinor_down = 2}, 2);
      c.at({0, 1}) = 1.0;
      c.at({1, 0}) = -1.0;
      break;
    }
    case BasicFieldId::d4:
      c = from_matrix4({.spinor_down = 2}, d4_canonical());
      break;
    case BasicFieldId::H:
      c = from_matrix4({.spinor_up = 1, .spinor_down = 1}, h_canonical());
      break;
    case BasicFieldId::D:
      c = from_matrix4({.spinor_down = 1, .conj_down = 1}, pairing_canonical());
      break;
    case BasicFieldId::G: {
      c = SpinTensorComponents::zeros({.spinor_up = 1, .conj_up = 1, .space_down = 1}, 2);
      for (int q = 0; q < 4; ++q)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) c.at({i, j, q}) = pauli2(q)(i, j);
      break;
    }
    case BasicFieldId::gamma: {
      c = SpinTensorComponents::zeros({.spinor_up = 1, .spinor_down = 1, .space_down = 1}, 4);
      for (int q = 0; q < 4; ++q)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) c.at({a, b, q}) = gamma_matrix(q)(a, b);
      break;
    }
  }
  if (variant == FieldVariant::opposite)
    for (Complex& v : c.values) v = -v;
  return c;
}

Mat4c chiral_extension(const Mat2c& s) {
  Mat2c inv_adj = inverse(adjoint(s));
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out(i, j) = s(i, j);
      out(2 + i, 2 + j) = inv_adj(i, j);
    }
  return out;
}

Mat4c p_reversion(const Mat4c& t) {
  Mat4c out;
  static const int perm[4] = {2, 3, 0, 1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = t(i, perm[j]);
  return out;
}

namespace {

// Contract one axis of the component array with a matrix: upper indices with
// inv(M), lower with M, conjugate indices with the conjugated matrices.
enum class AxisKind { spinor_up, spinor_down, conj_up, conj_down, space_up, space_down };

AxisKind axis_kind(const SpinTensorType& t, int axis) {
  int b = t.spinor_up;
  if (axis < b) return AxisKind::spinor_up;
  if (axis < (b += t.spinor_down)) return AxisKind::spinor_down;
  if (axis < (b += t.conj_up)) return AxisKind::conj_up;
  if (axis < (b += t.conj_down)) return AxisKind::conj_down;
  if (axis < (b += t.space_up)) return AxisKind::space_up;
  return AxisKind::space_down;
}

template <class GetCoeff>
SpinTensorComponents apply_axis(const SpinTensorComponents& c, int axis, int dim,
                                GetCoeff&& coeff) {
  SpinTensorComponents out = c;
  std::size_t stride = 1;
  for (int a = c.rank() - 1; a > axis; --a) stride *= static_cast<std::size_t>(c.axis_dim(a));
  std::size_t block = stride * static_cast<std::size_t>(dim);
  for (std::size_t base = 0; base < c.values.size(); base += block)
    for (std::size_t off = 0; off < stride; ++off)
      for (int n = 0; n < dim; ++n) {
        Complex s(0.0);
        for (int o = 0; o < dim; ++o)
          s += coeff(n, o) * c.values[base + static_cast<std::size_t>(o) * stride + off];
        out.values[base + static_cast<std::size_t>(n) * stride + off] = s;
      }
  return out;
}

SpinTensorComponents transform_impl(const SpinTensorComponents& c, const Mat4c& spin4,
                                    const Mat2c& spin2, const Mat4d& lorentz) {
  const bool four = c.spin_dim == 4;
  Mat4c s4 = spin4, s4i = four ? inverse(spin4) : Mat4c::identity();
  Mat2c s2 = spin2, s2i = four ? Mat2c::identity() : inverse(spin2);
  Mat4d li = inverse(lorentz);
  SpinTensorComponents out = c;
  for (int axis = 0; axis < c.rank(); ++axis) {
    switch (axis_kind(c.type, axis)) {
      case AxisKind::spinor_up:
        out = four ? apply_axis(out, axis, 4, [&](int n, int o) { return s4i(n, o); })
                   : apply_axis(out, axis, 2, [&](int n, int o) { return s2i(n, o); });
        break;
      case AxisKind::spinor_down:
        out = four ? apply_axis(out, axis, 4, [&](int n, int o) { return s4(o, n); })
                   : apply_axis(out, axis, 2, [&](int n, int o) { return s2(o, n); });
        break;
      case AxisKind::conj_up:
        out = four ? apply_axis(out, axis, 4, [&](int n, int o) { return std::conj(s4i(n, o)); })
                   : apply_axis(out, axis, 2, [&](int n, int o) { return std::conj(s2i(n, o)); });
        break;
      case AxisKind::conj_down:
        out = four ? apply_axis(out, axis, 4, [&](int n, int o) { return std::conj(s4(o, n)); })
                   : apply_axis(out, axis, 2, [&](int n, int o) { return std::conj(s2(o, n)); });
        break;
      case AxisKind::space_up:
        out = apply_axis(out, axis, 4, [&](int n, int o) { return Complex(li(n, o)); });
        break;
      case AxisKind::space_down:
        out = apply_axis(out, axis, 4, [&](int n, int o) { return Complex(lorentz(o, n)); });
        break;
    }
  }
  return out;
}

}  // namespace

SpinTensorComponents transform(const SpinTensorComponents& c, const Mat4c& spin,
                               const Mat4d& lorentz) {
  if (c.spin_dim != 4 && c.type.spin_slots() > 0)
    throw UsageError("transform: 4x4 spin matrix applied to two-component array");
  return transform_impl(c, spin, Mat2c::identity(), lorentz);
}

SpinTensorComponents transform(const SpinTensorComponents& c, const Mat2c& spin,
                               const Mat4d& lorentz) {
  if (c.spin_dim != 2 && c.type.spin_slots() > 0)
    throw UsageError("transform: 2x2 spin matrix applied to four-component array");
  return transform_impl(c, Mat4c::identity(), spin, lorentz);
}

const char* to_string(FramePairClass c) {
  switch (c) {
    case FramePairClass::canon_chiral:
      return "canonically-orthonormal-chiral";
    case FramePairClass::p_reverse_antichiral:
      return "P-reverse-antichiral";
    case FramePairClass::t_reverse_antichiral:
      return "T-reverse-antichiral";
    case FramePairClass::pt_reverse_chiral:
      return "PT-reverse-chiral";
  }
  return "?";
}

namespace {

// +1 or -1 relative to the canonical array; ClassificationError otherwise.
int canonical_sign(const SpinTensorComponents& rep, const SpinTensorComponents& canon,
                   const char* what) {
  constexpr double tol = 1e-9;
  if (rep.spin_dim != canon.spin_dim || !(rep.type == canon.type) ||
      rep.values.size() != canon.values.size())
    throw ClassificationError(std::string(what) + ": component array has the wrong shape");
  for (int sgn : {+1, -1}) {
    bool ok = true;
    for (std::size_t k = 0; k < rep.values.size() && ok; ++k)
      ok = std::abs(rep.values[k] - static_cast<double>(sgn) * canon.values[k]) <= tol;
    if (ok) return sgn;
  }
  throw ClassificationError(std::string(what) +
                            ": components are not plus or minus the canonical matrix");
}

}  // namespace

FramePairClass classify_frame_pair(const SpinTensorComponents& d_rep,
                                   const SpinTensorComponents& h_rep,
                                   const SpinTensorComponents& pairing_rep) {
  int sd = canonical_sign(d_rep, basic_field(BasicFieldId::d4), "metric component");
  int sh = canonical_sign(h_rep, basic_field(BasicFieldId::H), "chirality component");
  int sp = canonical_sign(pairing_rep, basic_field(BasicFieldId::D), "pairing component");
  if (sd > 0 && sh > 0 && sp > 0) return FramePairClass::canon_chiral;
  if (sd < 0 && sh < 0 && sp > 0) return FramePairClass::p_reverse_antichiral;
  if (sd > 0 && sh < 0 && sp < 0) return FramePairClass::t_reverse_antichiral;
  if (sd < 0 && sh > 0 && sp < 0) return FramePairClass::pt_reverse_chiral;
  throw ClassificationError("sign pattern matches none of the four special frame types");
}

}  // namespace spinsphere
