#include "spinsphere/curvature.hpp"

#include "test_util.hpp"

using namespace tests;

namespace {

const Complex kI(0.0, 1.0);

}  // namespace

TEST_CASE("curvature components against the closed forms") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (const Point& p : sample_points(ChartId::north_stereo, 25, 40)) {
    Rank4d r = riemann(FrameId::X, p, sf);
    auto d = sf.evaluate(p.coords[0]);
    double bb = 1.0 / (d.value * d.value) +
                d.first * d.first / (d.value * d.value * d.value * d.value);
    double aa = -d.first * d.first / (d.value * d.value * d.value * d.value) +
                d.second / (d.value * d.value * d.value);
    CHECK(r(1, 2, 1, 2) == doctest::Approx(bb).epsilon(1e-11));
    CHECK(r(0, 1, 0, 1) == doctest::Approx(aa).epsilon(1e-11));
    CHECK(std::abs(r(2, 3, 3, 3))  <= 1e-12);  // antisymmetry-zero slot
  }

  // unit sphere sectional curvature at constant radius one
  Rank4d r = riemann(FrameId::X, north(0.3, 0.7, -0.4, 1.0), ScaleFactor::constant(1.0));
  CHECK(r(1, 2, 1, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("curvature components coincide across frames at the same event") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (const Point& p : sample_points(ChartId::north_stereo, 20, 41)) {
    Rank4d rx = riemann(FrameId::X, p, sf);
    for (FrameId f : {FrameId::Y, FrameId::Ytilde, FrameId::E}) {
      Rank4d rf = riemann(f, transition(p, home_chart(f)), sf);
      for (std::size_t k = 0; k < rx.v.size(); ++k)
        CHECK(std::abs(rx.v[k] - rf.v[k]) <= 1e-9);
    }
  }
}

TEST_CASE("antisymmetry and the first Bianchi identity") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (FrameId f : {FrameId::X, FrameId::E})
    for (const Point& p : sample_points(home_chart(f), 30, 42)) {
      Rank4d r = riemann(f, p, sf);
      for (int pp = 0; pp < 4; ++pp)
        for (int q = 0; q < 4; ++q)
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              CHECK(std::abs(r(pp, q, i, j) + r(pp, q, j, i)) <= 1e-10);
              CHECK(std::abs(r(pp, q, i, j) + r(pp, i, j, q) + r(pp, j, q, i)) <= 1e-9);
            }
    }
}

TEST_CASE("spinor curvature components") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (const Point& p : sample_points(ChartId::north_stereo, 25, 43)) {
    Rank4c s = spinor_curvature(FramePair::psi_x, p, sf);
    auto d = sf.evaluate(p.coords[0]);
    double r4 = d.value * d.value * d.value * d.value;
    double al = -d.first * d.first / (2.0 * r4) + d.second / (2.0 * d.value * d.value * d.value);
    double be = 1.0 / (2.0 * d.value * d.value) + d.first * d.first / (2.0 * r4);
    CHECK(std::abs(s(0, 1, 0, 1) - al) <= 1e-11);
    CHECK(std::abs(s(0, 1, 3, 1) - be) <= 1e-11);
    // the entry printed with the wrong sign pairs with its (2,3) partner
    CHECK(std::abs(s(3, 2, 0, 1) - s(2, 3, 0, 1)) <= 1e-12);
    for (int pp = 0; pp < 4; ++pp)
      for (int q = 0; q < 4; ++q)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            CHECK(std::abs(s(pp, q, i, j) + s(pp, q, j, i)) <= 1e-10);
  }

  // constant radius: time-block entries vanish, spatial ones survive
  Rank4c s = spinor_curvature(FramePair::psi_x, north(0.2, 0.8, -0.3, 0.6),
                              ScaleFactor::constant(1.0));
  CHECK(std::abs(s(0, 1, 0, 1)) <= 1e-13);
  CHECK(std::abs(s(0, 0, 1, 2) - kI * 0.5) <= 1e-12);

  // identical tables in every associated pair
  auto sf2 = ScaleFactor::hyperbolic_cosine(1.0);
  for (const Point& p : sample_points(ChartId::north_stereo, 10, 44)) {
    Rank4c sx = spinor_curvature(FramePair::psi_x, p, sf2);
    for (FramePair pr : {FramePair::phi_y, FramePair::xi_e}) {
      Point q = transition(p, home_chart(tangent_frame(pr)));
      Rank4c sp = spinor_curvature(pr, q, sf2);
      for (std::size_t k = 0; k < sx.v.size(); ++k)
        CHECK(std::abs(sx.v[k] - sp.v[k]) <= 1e-9);
    }
  }
}

TEST_CASE("intertwining relation between the two curvatures") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (FramePair pair : {FramePair::psi_x, FramePair::phi_y, FramePair::xi_e})
    for (const Point& p : sample_points(home_chart(tangent_frame(pair)), 25, 45))
      CHECK(check_intertwining(pair, p, sf) <= 1e-9);

  // closed-form inputs only: residual at machine precision
  CHECK(check_intertwining(FramePair::psi_x, north(0.1, 0.9, 0.4, -0.7),
                           ScaleFactor::constant(1.0)) <= 1e-12);
}

TEST_CASE("Ricci tensor and scalar curvature") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (const Point& p : sample_points(ChartId::north_stereo, 25, 46)) {
    RicciScalar rs = ricci_and_scalar(FrameId::X, p, sf);
    auto d = sf.evaluate(p.coords[0]);
    double r = d.value;
    double want00 = 3.0 * d.first * d.first / (r * r * r * r) - 3.0 * d.second / (r * r * r);
    double wantii = 2.0 / (r * r) + d.first * d.first / (r * r * r * r) +
                    d.second / (r * r * r);
    CHECK(rs.ricci(0, 0) == doctest::Approx(want00).epsilon(1e-10));
    CHECK(rs.ricci(1, 1) == doctest::Approx(wantii).epsilon(1e-10));
    for (int q = 0; q < 4; ++q)
      for (int j = 0; j < 4; ++j)
        if (q != j) CHECK(std::abs(rs.ricci(q, j)) <= 1e-10);
    CHECK(rs.scalar ==
          doctest::Approx(-6.0 / (r * r) - 6.0 * d.second / (r * r * r)).epsilon(1e-10));
  }

  // scalar curvature of the static sphere of radius two
  RicciScalar rs =
      ricci_and_scalar(FrameId::X, north(0.0, 1.0, 0.5, -0.5), ScaleFactor::constant(2.0));
  CHECK(rs.scalar == doctest::Approx(-1.5).epsilon(1e-12));
}
