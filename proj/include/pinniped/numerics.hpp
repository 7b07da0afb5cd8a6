#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pinniped {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into (-pi, pi].
inline double normalize_angle(double a) {
  double r = std::remainder(a, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// Bracketed bisection for a continuous f with a sign change on [lo, hi].
/// Stops once the bracket is narrower than abs_tol and returns its midpoint.
template <typename F>
double bisect(F&& f, double lo, double hi, double abs_tol) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw std::invalid_argument("bisect: root is not bracketed");
  }
  // 200 halvings exhaust double precision on any finite bracket.
  for (int it = 0; it < 200 && (hi - lo) > abs_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace pinniped
