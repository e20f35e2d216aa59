#include "test_util.hpp"

using namespace tests;

namespace {

const ChartId kAll[] = {ChartId::north_stereo, ChartId::south_stereo, ChartId::spherical};

}  // namespace

TEST_CASE("stereographic transition inverts through the unit sphere") {
  Point p = transition(north(0.5, 1.0, 0.0, 0.0), ChartId::south_stereo);
  CHECK(p.coords[0] == 0.5);
  CHECK(p.coords[1] == doctest::Approx(1.0));

  Point q = transition(north(0.5, 2.0, 0.0, 0.0), ChartId::south_stereo);
  CHECK(q.coords[1] == doctest::Approx(0.5));
  CHECK(q.coords[2] == 0.0);
  CHECK(q.coords[3] == 0.0);
}

TEST_CASE("spherical equator point maps to the unit stereographic point") {
  Point p = transition(spherical(0.2, kPi / 2, kPi / 2, kPi / 2), ChartId::north_stereo);
  CHECK(p.coords[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(p.coords[2]) <= 1e-14);
  CHECK(std::abs(p.coords[3]) <= 1e-14);
}

TEST_CASE("round trips return the starting coordinates") {
  for (ChartId a : kAll) {
    auto pts = sample_points(a, 1000, 7);
    for (const Point& p : pts)
      for (ChartId b : kAll) {
        if (a == b) continue;
        Point back = transition(transition(p, b), a);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(back.coords[k] - p.coords[k]) <= 1e-12);
      }
  }
}

TEST_CASE("transition outputs normalize phi into [0, 2*pi)") {
  auto pts = sample_points(ChartId::north_stereo, 200, 3);
  for (const Point& p : pts) {
    Point s = transition(p, ChartId::spherical);
    CHECK(s.coords[3] >= 0.0);
    CHECK(s.coords[3] < 2.0 * kPi);
    CHECK(s.coords[1] > 0.0);
    CHECK(s.coords[1] < kPi);
    CHECK(s.coords[2] > 0.0);
    CHECK(s.coords[2] < kPi);
  }
}

TEST_CASE("embedding lands on the sphere of radius R") {
  auto sf = ScaleFactor::constant(1.0);
  EmbeddedPoint z = embed(north(0.1, 1.0, 0.0, 0.0), sf);
  CHECK(z.z[0] == doctest::Approx(1.0));
  CHECK(std::abs(z.z[1]) <= 1e-15);
  CHECK(std::abs(z.z[2]) <= 1e-15);
  CHECK(std::abs(z.z[3]) <= 1e-15);

  EmbeddedPoint w = embed(spherical(0.1, kPi / 2, kPi / 2, kPi / 2), sf);
  CHECK(w.z[0] == doctest::Approx(1.0));
  CHECK(std::abs(w.z[3]) <= 1e-15);

  auto cosh1 = ScaleFactor::hyperbolic_cosine(1.0);
  for (ChartId a : kAll)
    for (const Point& p : sample_points(a, 100, 5)) {
      EmbeddedPoint e = embed(p, cosh1);
      double n = std::sqrt(e.z[0] * e.z[0] + e.z[1] * e.z[1] + e.z[2] * e.z[2] + e.z[3] * e.z[3]);
      CHECK(std::abs(n - e.radius) / e.radius <= 1e-12);
    }
}

TEST_CASE("embedding is chart independent") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  for (ChartId a : kAll)
    for (const Point& p : sample_points(a, 100, 6))
      for (ChartId b : kAll) {
        if (a == b) continue;
        EmbeddedPoint z = embed(p, sf);
        EmbeddedPoint w = embed(transition(p, b), sf);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(z.z[k] - w.z[k]) <= 1e-10);
      }
}

TEST_CASE("holonomic metric matches the known diagonals") {
  auto r1 = ScaleFactor::constant(1.0);
  Mat4d g = holonomic_metric(north(0.0, 0.0, 0.0, 0.0), r1);
  Mat4d want;
  want(0, 0) = 1.0;
  want(1, 1) = want(2, 2) = want(3, 3) = -4.0;
  check_close(g, want, 1e-15);

  auto r2 = ScaleFactor::constant(2.0);
  Mat4d g2 = holonomic_metric(north(0.0, 1.0, 0.0, 0.0), r2);
  Mat4d want2;
  want2(0, 0) = 4.0;
  want2(1, 1) = want2(2, 2) = want2(3, 3) = -4.0;
  check_close(g2, want2, 1e-15);

  Mat4d g3 = holonomic_metric(spherical(0.0, kPi / 2, kPi / 2, 1.0), r2);
  check_close(g3, want2, 1e-12);
}

TEST_CASE("holonomic metric equals the embedding pullback") {
  auto sf = ScaleFactor::hyperbolic_cosine(1.0);
  const double h = 1e-6;
  for (ChartId a : kAll)
    for (const Point& p : sample_points(a, 60, 8)) {
      Mat4d g = holonomic_metric(p, sf);
      double r = sf.evaluate(p.coords[0]).value;
      CHECK(std::abs(g(0, 0) - r * r) <= 1e-9);
      for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) {
          double induced = 0.0;
          for (int k = 0; k < 4; ++k) {
            Point pp = p, pm = p;
            pp.coords[i] += h;
            pm.coords[i] -= h;
            Point qp = p, qm = p;
            qp.coords[j] += h;
            qm.coords[j] -= h;
            double di = (embed(pp, sf).z[k] - embed(pm, sf).z[k]) / (2.0 * h);
            double dj = (embed(qp, sf).z[k] - embed(qm, sf).z[k]) / (2.0 * h);
            induced += di * dj;
          }
          CHECK(std::abs(g(i, j) + induced) <= 1e-9);
        }
    }
}

TEST_CASE("jacobian: identity, finite differences, inverse rule") {
  Point p = north(0.3, 0.8, -1.2, 0.5);
  check_close(jacobian(p, ChartId::north_stereo), Mat4d::identity(), 0.0);

  const double h = 1e-6;
  for (ChartId a : kAll)
    for (const Point& q : sample_points(a, 40, 9))
      for (ChartId b : kAll) {
        if (a == b) continue;
        Mat4d j = jacobian(q, b);
        for (int nu = 0; nu < 4; ++nu) {
          Point qp = q, qm = q;
          qp.coords[nu] += h;
          qm.coords[nu] -= h;
          Point tp = transition(qp, b);
          Point tm = transition(qm, b);
          for (int mu = 0; mu < 4; ++mu)
            CHECK(std::abs(j(mu, nu) - (tp.coords[mu] - tm.coords[mu]) / (2.0 * h)) <= 1e-6);
        }
        check_close(jacobian(transition(q, b), a) * j, Mat4d::identity(), 1e-10);
      }

  // at |x| = 1 the stereographic jacobian is the reflection block
  Mat4d j = jacobian(north(0.0, 1.0, 0.0, 0.0), ChartId::south_stereo);
  Mat4d want = Mat4d::identity();
  want(1, 1) = -1.0;
  check_close(j, want, 1e-12);
}

TEST_CASE("pole and axis points are rejected") {
  CHECK_THROWS_AS(transition(north(0.0, 0.0, 0.0, 0.0), ChartId::south_stereo),
                  ChartDomainError);
  CHECK_THROWS_AS(transition(north(0.0, 0.0, 0.0, 2.0), ChartId::spherical), ChartDomainError);
  CHECK_THROWS_AS(transition(spherical(0.0, 1e-15, 1.0, 1.0), ChartId::north_stereo),
                  ChartDomainError);
  CHECK_THROWS_AS(transition(spherical(0.0, 1.0, kPi, 1.0), ChartId::north_stereo),
                  ChartDomainError);
  CHECK_THROWS_AS(jacobian(north(0.0, 0.0, 0.0, 0.0), ChartId::south_stereo), ChartDomainError);
  // the spatial origin itself is inside both stereographic charts
  CHECK_NOTHROW(embed(south(0.0, 0.0, 0.0, 0.0), ScaleFactor::constant(1.0)));
  CHECK_NOTHROW(embed(north(0.0, 0.0, 0.0, 0.0), ScaleFactor::constant(1.0)));
}
