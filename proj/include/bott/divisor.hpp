#pragma once

#include <map>

#include "bott/arith.hpp"
#include "bott/bott_fan.hpp"

namespace bott {

/// D = sum a_rho D_rho over the 2r torus-invariant prime divisors. Missing rays
/// have coefficient 0. Coefficients are exact rationals; integral divisors just
/// have denominator 1.
struct ToricDivisor {
  std::map<RayId, Rational> coeffs;

  Rational operator[](RayId ray) const {
    auto it = coeffs.find(ray);
    return it == coeffs.end() ? Rational(0) : it->second;
  }

  /// -K = sum of all D_rho.
  static ToricDivisor anticanonical(int length);
  static ToricDivisor prime(RayId ray) { return {{{ray, Rational(1)}}}; }
};

}  // namespace bott
