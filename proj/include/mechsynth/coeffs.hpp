#pragma once

#include <string>

#include "mechsynth/ratfunc.hpp"

namespace mechsynth {

/// Coefficients of
///
///     Y(s) = (a3 s^3 + a2 s^2 + a1 s + a0) / (b4 s^4 + b3 s^3 + b2 s^2 + b1 s)
///
/// with b4 in {0, 1}. b4 = 1 is the monic quartic form; b4 = 0 is the cubic
/// form, which is only defined up to a common positive scale.
struct CoefficientVector {
  Rat a3, a2, a1, a0;
  Rat b3, b2, b1;
  int b4 = 1;

  Poly numerator() const { return Poly{a0, a1, a2, a3}; }
  Poly denominator() const { return Poly{Rat(0), b1, b2, b3, Rat(b4)}; }
  RationalFunction function() const { return rf_normalize(numerator(), denominator()); }

  bool all_nonnegative() const;
  /// Multiplies every coefficient by k (only meaningful for b4 = 0).
  CoefficientVector scaled(const Rat& k) const;

  /// "(a3,a2,a1,a0;b3,b2,b1)" with a "b4=0" suffix for the cubic form.
  std::string str() const;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// Reads the monic quartic form off num/den. The pair need not be coprime:
/// common factors are kept so that e.g. 2s^3/(2s^4+2s^3) maps to (1,0,0,0;1,0,0).
/// Throws ShapeMismatch unless deg den = 4, den(0) = 0 and deg num <= 3.
CoefficientVector extract_theorem5_coeffs(const Poly& num, const Poly& den);
CoefficientVector extract_theorem5_coeffs(const RationalFunction& y);

/// Reads the cubic form literally (no rescaling). Throws ShapeMismatch unless
/// 1 <= deg den <= 3, den(0) = 0 and deg num <= 3.
CoefficientVector extract_theorem6_coeffs(const Poly& num, const Poly& den);
CoefficientVector extract_theorem6_coeffs(const RationalFunction& y);

}  // namespace mechsynth
