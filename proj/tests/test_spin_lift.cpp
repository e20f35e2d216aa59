#include "spinsphere/spin_lift.hpp"

#include "spinsphere/frames.hpp"
#include "test_util.hpp"

using namespace tests;

namespace {

Mat2c mat2(Complex a, Complex b, Complex c, Complex d) {
  Mat2c m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

const Complex kI(0.0, 1.0);

}  // namespace

TEST_CASE("homomorphism basics") {
  check_close(phi(Mat2c::identity()), Mat4d::identity(), 1e-15);

  Mat4d img = phi(mat2(kI, 0.0, 0.0, -kI));
  Mat4d want;
  want(0, 0) = 1.0;
  want(1, 1) = -1.0;
  want(2, 2) = -1.0;
  want(3, 3) = 1.0;
  check_close(img, want, 1e-15);

  SampleRng rng(99);
  for (int n = 0; n < 1000; ++n) {
    Mat2c a = rng.random_sl2c();
    Mat2c b = rng.random_sl2c();
    check_close(phi(a * b), phi(a) * phi(b), 1e-9);
    Mat2c neg = a;
    for (Complex& e : neg.a) e = -e;
    check_close(phi(a), phi(neg), 1e-12);
    CHECK(is_special_orthochronous(phi(a)));
  }

  CHECK_THROWS_AS(phi(mat2(2.0, 0.0, 0.0, 2.0)), MembershipError);
}

TEST_CASE("membership predicates") {
  CHECK(is_special_orthochronous(Mat4d::identity()));
  Mat4d flip = Mat4d::identity();
  flip(3, 3) = -1.0;
  CHECK_FALSE(is_special_orthochronous(flip));  // det = -1
  CHECK(is_sl2c(Mat2c::identity()));
  CHECK_FALSE(is_sl2c(mat2(2.0, 0.0, 0.0, 2.0)));

  // the plain south-north transition is a reflection, the inverted one a
  // rotation
  for (const Point& p : sample_points(ChartId::south_stereo, 40, 17)) {
    CHECK_FALSE(is_special_orthochronous(frame_transition(FrameId::Y, FrameId::X, p)));
    CHECK(is_special_orthochronous(frame_transition(FrameId::Ytilde, FrameId::X, p)));
  }
}

TEST_CASE("lift solves the half-spin inverse") {
  Mat2c unit = lift(Mat4d::identity());
  check_close(unit, Mat2c::identity(), 1e-12);

  // diag(i,-i) is the convention representative at y = (0,0,1)
  Mat2c s = lift(frame_transition(FrameId::Ytilde, FrameId::X, south(0.0, 0.0, 0.0, 1.0)));
  check_close(s, mat2(kI, 0.0, 0.0, -kI), 1e-10);

  SampleRng rng(123);
  for (int n = 0; n < 1000; ++n) {
    Mat2c sample = rng.random_sl2c();
    Mat4d l = phi(sample);
    Mat2c lifted = lift(l);
    CHECK(std::abs(determinant(lifted) - 1.0) <= 1e-10);
    check_close(phi(lifted), l, 1e-9);
    // the result is the convention representative of {sample, -sample}
    check_close(lifted, apply_sign_convention(sample), 1e-8);
  }

  Mat4d bad = Mat4d::identity();
  bad(3, 3) = -1.0;
  CHECK_THROWS_AS(lift(bad), MembershipError);
}

TEST_CASE("sign convention is deterministic") {
  Mat2c a = mat2(Complex(-0.3, 0.1), 1.0, -2.0, Complex(0.5, 0.5));
  Mat2c pos = apply_sign_convention(a);
  CHECK(pos(0, 0).real() > 0.0);
  Mat2c again = apply_sign_convention(pos);
  CHECK(max_abs_diff(pos, again) == 0.0);

  // first entry imaginary: the imaginary part decides
  Mat2c b = mat2(Complex(0.0, -2.0), 0.0, 0.0, Complex(0.0, 0.5));
  CHECK(apply_sign_convention(b)(0, 0).imag() > 0.0);
}

TEST_CASE("closed-form lifts") {
  Point pole = south(0.0, 0.0, 0.0, 1.0);
  check_close(closed_form_lift(LiftPair::ytilde_to_x, pole), mat2(kI, 0.0, 0.0, -kI), 1e-15);

  for (const Point& p : sample_points(ChartId::spherical, 60, 31)) {
    Mat2c stilde = closed_form_lift(LiftPair::ytilde_to_x, p);
    Mat2c ttilde = closed_form_lift(LiftPair::x_to_ytilde, p);
    Mat2c shat = closed_form_lift(LiftPair::e_to_x, p);
    Mat2c scheck = closed_form_lift(LiftPair::e_to_ytilde, p);

    CHECK(std::abs(determinant(stilde) - 1.0) <= 1e-12);
    CHECK(std::abs(determinant(ttilde) - 1.0) <= 1e-12);

    // squared inverted transition is minus the identity
    Mat2c sq = stilde * stilde;
    check_close(sq, mat2(-1.0, 0.0, 0.0, -1.0), 1e-12);

    // mutually inverse pair differs only by overall sign
    Mat2c sum;
    for (std::size_t k = 0; k < 4; ++k) sum.a[k] = stilde.a[k] + ttilde.a[k];
    check_close(sum, Mat2c{}, 1e-12);

    // spherical lift factors through the inverted south one
    check_close(shat, stilde * scheck, 1e-12);
  }

  // each closed form projects onto its computed frame transition
  for (LiftPair pair : {LiftPair::ytilde_to_x, LiftPair::x_to_ytilde, LiftPair::e_to_x,
                        LiftPair::e_to_ytilde}) {
    for (const Point& p : sample_points(ChartId::spherical, 40, 37))
      check_close(phi(closed_form_lift(pair, p)), lift_pair_transition(pair, p), 1e-9);
  }

  CHECK_THROWS_AS(closed_form_lift(LiftPair::ytilde_to_x, south(0.0, 0.0, 0.0, 0.0)),
                  ChartDomainError);
}
