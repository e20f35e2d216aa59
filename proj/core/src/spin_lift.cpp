#include "spinsphere/spin_lift.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "spinsphere/detail/fields.hpp"
#include "spinsphere/frames.hpp"

namespace spinsphere {

namespace {

const Mat2c& pauli(int q) {
  static const std::array<Mat2c, 4> s = [] {
    std::array<Mat2c, 4> m{};
    m[0](0, 0) = m[0](1, 1) = 1.0;
    m[1](0, 1) = m[1](1, 0) = 1.0;
    m[2](0, 1) = Complex(0.0, -1.0);
    m[2](1, 0) = Complex(0.0, 1.0);
    m[3](0, 0) = 1.0;
    m[3](1, 1) = -1.0;
    return m;
  }();
  return s[q];
}

}  // namespace

bool is_sl2c(const Mat2c& s) { return std::abs(determinant(s) - 1.0) <= kGroupTolerance; }

bool is_special_orthochronous(const Mat4d& m) {
  Mat4d g = minkowski();
  if (max_abs_diff(transpose(m) * g * m, g) > kGroupTolerance) return false;
  if (std::abs(determinant(m) - 1.0) > kGroupTolerance) return false;
  return m(0, 0) >= 1.0 - kGroupTolerance;
}

Mat4d phi(const Mat2c& s) {
  if (!is_sl2c(s)) throw MembershipError("phi: matrix is not in SL(2,C) (det != 1)");
  Mat2c sd = adjoint(s);
  Mat4d out;
  for (int q = 0; q < 4; ++q) {
    Mat2c h = s * pauli(q) * sd;
    for (int p = 0; p < 4; ++p) {
      // (1/2) tr(sigma_p H_q); real since both factors are Hermitian.
      Complex tr = (pauli(p) * h)(0, 0) + (pauli(p) * h)(1, 1);
      out(p, q) = 0.5 * tr.real();
    }
  }
  return out;
}

Mat2c apply_sign_convention(const Mat2c& s) {
  constexpr double eps = 1e-12;
  for (const Complex& e : s.a) {
    if (std::abs(e) <= eps) continue;
    bool flip = std::abs(e.real()) > eps ? e.real() < 0.0 : e.imag() < 0.0;
    if (!flip) return s;
    Mat2c out = s;
    for (Complex& v : out.a) v = -v;
    return out;
  }
  return s;
}

Mat2c lift(const Mat4d& lorentz) {
  if (!is_special_orthochronous(lorentz))
    throw MembershipError("lift: matrix is not in SO+(1,3)");

  // H_q = sum_p L^p_q sigma_p, the Hermitian image of each basis vector.
  std::array<Mat2c, 4> h{};
  for (int q = 0; q < 4; ++q)
    for (int p = 0; p < 4; ++p)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h[q](i, j) += lorentz(p, q) * pauli(p)(i, j);

  // s sigma_q s^dag = H_q  <=>  s sigma_q = H_q eps conj(s) eps^{-1}, linear
  // over the reals in the entries of s. Solutions form the real line {c s}.
  // eps conj(s) eps^{-1} = [[conj(d), -conj(c)], [-conj(b), conj(a)]].
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(32, 8);
  auto entry_of = [](int i, int j) { return i * 2 + j; };  // s index -> 0..3
  for (int q = 0; q < 4; ++q) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        // coefficient of s_{ik} in (s sigma_q)_{ij} is sigma_q(k, j)
        std::array<Complex, 4> lin{};   // coefficients on s entries
        std::array<Complex, 4> conj{};  // coefficients on conj(s) entries
        for (int k = 0; k < 2; ++k) lin[entry_of(i, k)] += pauli(q)(k, j);
        // (H eps conj(s) eps^{-1})_{ij} = H(i,0)*E(0,j) + H(i,1)*E(1,j) with
        // E = [[conj(s11'), -conj(s01')],...] laid out explicitly:
        // E(0,0)=conj(s[1][1]) E(0,1)=-conj(s[1][0])
        // E(1,0)=-conj(s[0][1]) E(1,1)=conj(s[0][0])
        const int e_idx[2][2] = {{entry_of(1, 1), entry_of(1, 0)}, {entry_of(0, 1), entry_of(0, 0)}};
        const double e_sgn[2][2] = {{1.0, -1.0}, {-1.0, 1.0}};
        for (int k = 0; k < 2; ++k) conj[e_idx[k][j]] -= e_sgn[k][j] * h[q](i, k);
        // Re/Im rows over unknowns (Re s_0..3, Im s_0..3)
        int row = (q * 4 + i * 2 + j) * 2;
        for (int u = 0; u < 4; ++u) {
          Complex ap = lin[u] + conj[u];
          Complex am = lin[u] - conj[u];
          m(row, u) = ap.real();
          m(row, 4 + u) = -am.imag();
          m(row + 1, u) = ap.imag();
          m(row + 1, 4 + u) = am.real();
        }
      }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double scale = sv(0);
  if (!(sv(7) <= 1e-6 * scale) || !(sv(6) > 1e-6 * scale))
    throw ConditioningError("lift: null space not well separated");
  Eigen::VectorXd v = svd.matrixV().col(7);

  Mat2c s;
  for (int u = 0; u < 4; ++u) s.a[u] = Complex(v(u), v(4 + u));
  Complex det = determinant(s);
  // For an exact kernel vector c*s0, det = c^2 > 0; take the principal root.
  Complex root = std::sqrt(det);
  for (Complex& e : s.a) e /= root;
  return apply_sign_convention(s);
}

const char* to_string(LiftPair pair) {
  switch (pair) {
    case LiftPair::ytilde_to_x:
      return "ytilde-x";
    case LiftPair::x_to_ytilde:
      return "x-ytilde";
    case LiftPair::e_to_x:
      return "e-x";
    case LiftPair::e_to_ytilde:
      return "e-ytilde";
  }
  return "?";
}

Mat2c closed_form_lift(LiftPair pair, const Point& p) {
  const Complex i(0.0, 1.0);
  switch (pair) {
    case LiftPair::ytilde_to_x: {
      Point q = transition(p, ChartId::south_stereo);
      detail::require_off_pole(q.coords, "closed_form_lift");
      double n = std::sqrt(detail::spatial_norm2(q.coords));
      double y1 = q.coords[1], y2 = q.coords[2], y3 = q.coords[3];
      Mat2c s;
      s(0, 0) = i * y3 / n;
      s(0, 1) = (i * y1 + y2) / n;
      s(1, 0) = (i * y1 - y2) / n;
      s(1, 1) = -i * y3 / n;
      return s;
    }
    case LiftPair::x_to_ytilde: {
      Point q = transition(p, ChartId::north_stereo);
      detail::require_off_pole(q.coords, "closed_form_lift");
      double n = std::sqrt(detail::spatial_norm2(q.coords));
      double x1 = q.coords[1], x2 = q.coords[2], x3 = q.coords[3];
      Mat2c s;
      s(0, 0) = -i * x3 / n;
      s(0, 1) = -(i * x1 + x2) / n;
      s(1, 0) = -(i * x1 - x2) / n;
      s(1, 1) = i * x3 / n;
      return s;
    }
    case LiftPair::e_to_x: {
      Point q = transition(p, ChartId::spherical);
      detail::require_spherical_domain(q.coords, "closed_form_lift");
      double th = q.coords[2], ph = q.coords[3];
      const double r2 = std::sqrt(2.0);
      Mat2c s;
      s(0, 0) = std::exp(i * (ph + th) / 2.0) / r2;
      s(0, 1) = -std::exp(i * (ph - th) / 2.0) / r2;
      s(1, 0) = std::exp(i * (th - ph) / 2.0) / r2;
      s(1, 1) = std::exp(-i * (th + ph) / 2.0) / r2;
      return s;
    }
    case LiftPair::e_to_ytilde:
    default: {
      Point q = transition(p, ChartId::spherical);
      detail::require_spherical_domain(q.coords, "closed_form_lift");
      double th = q.coords[2], ph = q.coords[3];
      const double r2 = std::sqrt(2.0);
      Mat2c s;
      s(0, 0) = -i * std::exp(i * (ph - th) / 2.0) / r2;
      s(0, 1) = i * std::exp(i * (ph + th) / 2.0) / r2;
      s(1, 0) = i * std::exp(i * (-th - ph) / 2.0) / r2;
      s(1, 1) = i * std::exp(i * (th - ph) / 2.0) / r2;
      return s;
    }
  }
}

Mat4d lift_pair_transition(LiftPair pair, const Point& p) {
  switch (pair) {
    case LiftPair::ytilde_to_x:
      return frame_transition(FrameId::Ytilde, FrameId::X, p);
    case LiftPair::x_to_ytilde:
      return frame_transition(FrameId::X, FrameId::Ytilde, p);
    case LiftPair::e_to_x:
      return frame_transition(FrameId::E, FrameId::X, p);
    case LiftPair::e_to_ytilde:
    default:
      return frame_transition(FrameId::E, FrameId::Ytilde, p);
  }
}

}  // namespace spinsphere
