#pragma once

#include "spinsphere/charts.hpp"
#include "spinsphere/linalg.hpp"

namespace spinsphere {

// Group-membership tolerance: two orders above accumulated double-precision
// error for 4x4 products.
inline constexpr double kGroupTolerance = 1e-10;

bool is_sl2c(const Mat2c& s);
bool is_special_orthochronous(const Mat4d& m);

// Two-to-one homomorphism SL(2,C) -> SO+(1,3); phi(-s) = phi(s).
Mat4d phi(const Mat2c& s);  // throws MembershipError unless det s = 1

// Deterministic representative of {+s, -s}: first entry (row-major) with
// modulus > 1e-12 gets a positive real part, or positive imaginary part when
// its real part is within 1e-12 of zero.
Mat2c apply_sign_convention(const Mat2c& s);

// Inverse of phi up to sign, by solving s sigma_q s^dag = H_q as a
// real-linear system in the four complex entries, then normalizing det = 1
// and applying the sign convention.
Mat2c lift(const Mat4d& lorentz);  // MembershipError / ConditioningError

// The closed-form lifts of the inter-frame transition matrices. The pair
// "a-b" names the transition with (a-frame)_i = sum_j M^j_i (b-frame)_j.
enum class LiftPair { ytilde_to_x, x_to_ytilde, e_to_x, e_to_ytilde };

const char* to_string(LiftPair pair);

Mat2c closed_form_lift(LiftPair pair, const Point& p);

// Frame transition matching a lift pair (phi of the closed form equals this).
Mat4d lift_pair_transition(LiftPair pair, const Point& p);

}  // namespace spinsphere
