#include <random>

#include "test_util.hpp"

using namespace tests;

namespace {

double fd(double (*f)(double), double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("dual derivatives of the math functions") {
  for (double x : {0.3, 1.2, -0.8}) {
    Dual1 d(x, 1.0);
    CHECK(sin(d).du == doctest::Approx(fd(std::sin, x)).epsilon(1e-9));
    CHECK(cos(d).du == doctest::Approx(fd(std::cos, x)).epsilon(1e-9));
    CHECK(cosh(d).du == doctest::Approx(fd(std::cosh, x)).epsilon(1e-9));
    CHECK(exp(d).du == doctest::Approx(fd(std::exp, x)).epsilon(1e-9));
    if (x > 0) CHECK(sqrt(d).du == doctest::Approx(fd(std::sqrt, x)).epsilon(1e-9));
    if (std::abs(x) < 1.0)
      CHECK(acos(d).du == doctest::Approx(fd(std::acos, x)).epsilon(1e-8));
  }
  Dual1 y(0.7, 1.0), x(1.3, 0.0);
  double base = std::atan2(0.7, 1.3);
  double dd = (std::atan2(0.7 + 1e-6, 1.3) - std::atan2(0.7 - 1e-6, 1.3)) / 2e-6;
  CHECK(atan2(y, x).re == doctest::Approx(base));
  CHECK(atan2(y, x).du == doctest::Approx(dd).epsilon(1e-8));
}

TEST_CASE("nested duals deliver exact second derivatives") {
  // f(x) = x^2 cosh(x): f'' = (2 + x^2) cosh(x) + 4 x sinh(x)
  auto f = [](auto x) { return x * x * cosh(x); };
  double x0 = 0.6;
  Dual2 x(Dual1(x0, 1.0), Dual1(1.0, 0.0));
  double want = (2.0 + x0 * x0) * std::cosh(x0) + 4.0 * x0 * std::sinh(x0);
  CHECK(f(x).du.du == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("matrix inverse and determinant") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Mat4d m;
    for (auto& v : m.a) v = u(gen);
    m(0, 0) += 3.0;  // keep well conditioned
    m(1, 1) += 3.0;
    m(2, 2) += 3.0;
    m(3, 3) += 3.0;
    check_close(m * inverse(m), Mat4d::identity(), 1e-12);

    Mat2c c;
    for (auto& v : c.a) v = Complex(u(gen), u(gen));
    c(0, 0) += 2.0;
    c(1, 1) += 2.0;
    Mat2c prod = c * inverse(c);
    CHECK(std::abs(prod(0, 0) - 1.0) <= 1e-12);
    CHECK(std::abs(prod(0, 1)) <= 1e-12);
  }
  Mat4d diag;
  diag(0, 0) = 2.0;
  diag(1, 1) = -1.0;
  diag(2, 2) = 3.0;
  diag(3, 3) = 1.0;
  CHECK(determinant(diag) == doctest::Approx(-6.0));
  CHECK(determinant(minkowski()) == doctest::Approx(-1.0));
}

TEST_CASE("matrix inverse works over dual scalars") {
  // invert F(t) and check d/dt of F^{-1} = -F^{-1} F' F^{-1}
  auto make = [](auto t) {
    Mat<decltype(t), 4> m;
    m(0, 0) = 1.0 + t * t;
    m(1, 1) = 2.0 + t;
    m(2, 2) = 3.0 - t;
    m(3, 3) = 1.0 + 0.5 * t;
    m(0, 1) = t;
    m(1, 0) = 0.25 * t;
    return m;
  };
  double t0 = 0.4, h = 1e-6;
  Mat<Dual1, 4> mi = inverse(make(Dual1(t0, 1.0)));
  Mat4d lo = inverse(make(t0 - h));
  Mat4d hi = inverse(make(t0 + h));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(mi(i, j).du == doctest::Approx((hi(i, j) - lo(i, j)) / (2.0 * h)).epsilon(1e-7));
}

TEST_CASE("adjoint conjugate-transposes") {
  Mat2c c;
  c(0, 0) = Complex(1.0, 2.0);
  c(0, 1) = Complex(0.0, -1.0);
  c(1, 0) = Complex(3.0, 0.5);
  c(1, 1) = Complex(-2.0, 1.0);
  Mat2c a = adjoint(c);
  CHECK(a(0, 0) == Complex(1.0, -2.0));
  CHECK(a(1, 0) == Complex(0.0, 1.0));
  CHECK(a(0, 1) == Complex(3.0, -0.5));
}
