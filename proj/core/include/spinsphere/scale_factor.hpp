#pragma once

#include <array>
#include <string>
#include <string_view>

#include "spinsphere/dual.hpp"
#include "spinsphere/errors.hpp"

namespace spinsphere {

enum class ScaleModel { constant, linear, hyperbolic_cosine, polynomial };

// Sphere radius R as a function of the shared time coordinate eta, with exact
// first and second derivatives. Immutable; safe to share across threads.
class ScaleFactor {
 public:
  struct Derivatives {
    double value;   // R
    double first;   // R'
    double second;  // R''
  };

  // constant model rejects r0 <= 0 here; the other models are checked at
  // evaluation time (their sign can depend on eta).
  static ScaleFactor constant(double r0);
  static ScaleFactor linear(double a, double b);          // R = a + b*eta
  static ScaleFactor hyperbolic_cosine(double a);         // R = a*cosh(eta)
  static ScaleFactor polynomial(const std::array<double, 4>& c);

  // Grammar: const:<R0> | linear:<a>,<b> | cosh:<a> | poly:<c0>,<c1>,<c2>,<c3>
  static ScaleFactor parse(std::string_view text);

  Derivatives evaluate(double eta) const;  // throws DomainError if R(eta) <= 0

  // Same closed form over any scalar type (dual numbers included).
  template <class T>
  T radius(const T& eta) const {
    using std::cosh;
    T r{};
    switch (model_) {
      case ScaleModel::constant:
        r = T(p_[0]);
        break;
      case ScaleModel::linear:
        r = p_[0] + p_[1] * eta;
        break;
      case ScaleModel::hyperbolic_cosine:
        r = p_[0] * cosh(eta);
        break;
      case ScaleModel::polynomial:
        r = p_[0] + eta * (p_[1] + eta * (p_[2] + eta * T(p_[3])));
        break;
    }
    if (real_part(r) <= 0.0) throw DomainError("scale factor R(eta) <= 0 at eta = " + std::to_string(real_part(eta)));
    return r;
  }

  ScaleModel model() const { return model_; }
  const std::string& spec_text() const { return spec_; }

 private:
  ScaleFactor(ScaleModel m, std::array<double, 4> p, std::string spec)
      : model_(m), p_(p), spec_(std::move(spec)) {}

  ScaleModel model_;
  std::array<double, 4> p_{};
  std::string spec_;
};

}  // namespace spinsphere
