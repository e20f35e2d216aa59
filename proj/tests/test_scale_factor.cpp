#include "test_util.hpp"

using namespace tests;

TEST_CASE("scale factor closed-form derivatives") {
  auto c = ScaleFactor::constant(2.0).evaluate(1.0);
  CHECK(c.value == 2.0);
  CHECK(c.first == 0.0);
  CHECK(c.second == 0.0);

  auto l = ScaleFactor::linear(1.0, 3.0).evaluate(2.0);
  CHECK(l.value == 7.0);
  CHECK(l.first == 3.0);
  CHECK(l.second == 0.0);

  auto h = ScaleFactor::hyperbolic_cosine(1.0).evaluate(0.0);
  CHECK(h.value == 1.0);
  CHECK(h.first == 0.0);
  CHECK(h.second == 1.0);
}

TEST_CASE("scale factor spec grammar") {
  CHECK(ScaleFactor::parse("const:2.0").evaluate(5.0).value == 2.0);
  auto l = ScaleFactor::parse("linear:1,3");
  CHECK(l.evaluate(2.0).value == 7.0);
  CHECK(ScaleFactor::parse("cosh:2").evaluate(0.0).value == 2.0);
  auto p = ScaleFactor::parse("poly:1,0,2,0.5").evaluate(1.0);
  CHECK(p.value == doctest::Approx(3.5));
  CHECK(p.first == doctest::Approx(0.0 + 2.0 * 2.0 + 3.0 * 0.5));

  CHECK_THROWS_AS(ScaleFactor::parse("const:-1"), DomainError);
  CHECK_THROWS_WITH_AS(ScaleFactor::parse("const:abc"),
                       doctest::Contains("bad number token 'abc'"), ParseError);
  CHECK_THROWS_AS(ScaleFactor::parse("linear:1"), ParseError);
  CHECK_THROWS_AS(ScaleFactor::parse("warp:1"), ParseError);
  CHECK_THROWS_AS(ScaleFactor::parse("const"), ParseError);
  CHECK_THROWS_AS(ScaleFactor::parse("poly:1,2,3"), ParseError);
}

TEST_CASE("domain violations reject eta with R <= 0") {
  auto lin = ScaleFactor::linear(1.0, -1.0);
  CHECK(lin.evaluate(0.5).value == doctest::Approx(0.5));
  CHECK_THROWS_AS(lin.evaluate(2.0), DomainError);
  CHECK_THROWS_AS(lin.radius(2.0), DomainError);
  CHECK_THROWS_AS(ScaleFactor::constant(0.0), DomainError);
}

TEST_CASE("finite differences agree with the reported derivatives") {
  const double h = 1e-5;
  const ScaleFactor models[] = {
      ScaleFactor::constant(2.0),
      ScaleFactor::linear(2.0, 0.3),
      ScaleFactor::hyperbolic_cosine(1.0),
      ScaleFactor::polynomial({2.0, 0.1, 0.05, 0.01}),
  };
  for (const auto& sf : models) {
    for (double eta = -0.9; eta < 1.0; eta += 0.13) {
      auto d = sf.evaluate(eta);
      double fd1 = (sf.evaluate(eta + h).value - sf.evaluate(eta - h).value) / (2.0 * h);
      double fd2 = (sf.evaluate(eta + h).first - sf.evaluate(eta - h).first) / (2.0 * h);
      CHECK(std::abs(fd1 - d.first) / std::max(std::abs(d.first), 1.0) <= 1e-7);
      CHECK(std::abs(fd2 - d.second) / std::max(std::abs(d.second), 1.0) <= 1e-7);
    }
  }
}

TEST_CASE("dual evaluation matches the analytic derivatives") {
  auto sf = ScaleFactor::parse("poly:2,0.1,0.05,0.01");
  for (double eta : {-0.7, 0.0, 0.9}) {
    Dual1 r = sf.radius(Dual1(eta, 1.0));
    auto d = sf.evaluate(eta);
    CHECK(r.re == doctest::Approx(d.value).epsilon(1e-14));
    CHECK(r.du == doctest::Approx(d.first).epsilon(1e-14));
    Dual2 r2 = sf.radius(Dual2(Dual1(eta, 1.0), Dual1(1.0, 0.0)));
    CHECK(r2.du.du == doctest::Approx(d.second).epsilon(1e-14));
  }
}
