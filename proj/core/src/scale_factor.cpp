#include "spinsphere/scale_factor.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace spinsphere {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

double parse_number(std::string_view token) {
  std::string t(token);
  if (t.empty()) throw ParseError("scale factor spec: empty number token");
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size())
    throw ParseError("scale factor spec: bad number token '" + t + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

ScaleFactor ScaleFactor::constant(double r0) {
  if (r0 <= 0.0) throw DomainError("constant scale factor requires R0 > 0, got " + fmt(r0));
  return {ScaleModel::constant, {r0, 0, 0, 0}, "const:" + fmt(r0)};
}

ScaleFactor ScaleFactor::linear(double a, double b) {
  return {ScaleModel::linear, {a, b, 0, 0}, "linear:" + fmt(a) + "," + fmt(b)};
}

ScaleFactor ScaleFactor::hyperbolic_cosine(double a) {
  return {ScaleModel::hyperbolic_cosine, {a, 0, 0, 0}, "cosh:" + fmt(a)};
}

ScaleFactor ScaleFactor::polynomial(const std::array<double, 4>& c) {
  return {ScaleModel::polynomial, c,
          "poly:" + fmt(c[0]) + "," + fmt(c[1]) + "," + fmt(c[2]) + "," + fmt(c[3])};
}

ScaleFactor ScaleFactor::parse(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("scale factor spec '" + std::string(text) + "': missing ':'");
  std::string_view head = text.substr(0, colon);
  auto args = split(text.substr(colon + 1), ',');
  auto expect_args = [&](std::size_t n) {
    if (args.size() != n)
      throw ParseError("scale factor spec '" + std::string(text) + "': expected " +
                       std::to_string(n) + " argument(s) after '" + std::string(head) + ":'");
  };
  if (head == "const") {
    expect_args(1);
    return constant(parse_number(args[0]));
  }
  if (head == "linear") {
    expect_args(2);
    return linear(parse_number(args[0]), parse_number(args[1]));
  }
  if (head == "cosh") {
    expect_args(1);
    return hyperbolic_cosine(parse_number(args[0]));
  }
  if (head == "poly") {
    expect_args(4);
    return polynomial({parse_number(args[0]), parse_number(args[1]), parse_number(args[2]),
                       parse_number(args[3])});
  }
  throw ParseError("scale factor spec: unknown model '" + std::string(head) + "'");
}

ScaleFactor::Derivatives ScaleFactor::evaluate(double eta) const {
  Derivatives d{};
  switch (model_) {
    case ScaleModel::constant:
      d = {p_[0], 0.0, 0.0};
      break;
    case ScaleModel::linear:
      d = {p_[0] + p_[1] * eta, p_[1], 0.0};
      break;
    case ScaleModel::hyperbolic_cosine:
      d = {p_[0] * std::cosh(eta), p_[0] * std::sinh(eta), p_[0] * std::cosh(eta)};
      break;
    case ScaleModel::polynomial:
      d = {p_[0] + eta * (p_[1] + eta * (p_[2] + eta * p_[3])),
           p_[1] + eta * (2.0 * p_[2] + eta * 3.0 * p_[3]), 2.0 * p_[2] + eta * 6.0 * p_[3]};
      break;
  }
  if (d.value <= 0.0)
    throw DomainError("scale factor R(eta) <= 0 at eta = " + fmt(eta) + " for " + spec_);
  return d;
}

}  // namespace spinsphere
