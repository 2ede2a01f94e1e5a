#include "mechsynth/coeffs.hpp"

namespace mechsynth {

bool CoefficientVector::all_nonnegative() const {
  for (const Rat* r : {&a3, &a2, &a1, &a0, &b3, &b2, &b1}) {
    if (r->sign() < 0) return false;
  }
  return true;
}

CoefficientVector CoefficientVector::scaled(const Rat& k) const {
  CoefficientVector out = *this;
  for (Rat* r : {&out.a3, &out.a2, &out.a1, &out.a0, &out.b3, &out.b2, &out.b1}) *r *= k;
  return out;
}

std::string CoefficientVector::str() const {
  std::string out = "(" + a3.str() + "," + a2.str() + "," + a1.str() + "," + a0.str() + ";" +
                    b3.str() + "," + b2.str() + "," + b1.str() + ")";
  if (b4 == 0) out += " b4=0";
  return out;
}

CoefficientVector extract_theorem5_coeffs(const Poly& num, const Poly& den) {
  if (den.degree() != 4) {
    throw Error(ErrorKind::ShapeMismatch,
                "quartic form needs a degree-4 denominator, got degree " + std::to_string(den.degree()));
  }
  if (!den.coeff(0).is_zero()) throw Error(ErrorKind::ShapeMismatch, "denominator must vanish at s = 0");
  if (num.degree() > 3) throw Error(ErrorKind::ShapeMismatch, "numerator degree exceeds 3");
  Rat scale = den.lead().inverse();
  CoefficientVector cv;
  cv.a3 = num.coeff(3) * scale;
  cv.a2 = num.coeff(2) * scale;
  cv.a1 = num.coeff(1) * scale;
  cv.a0 = num.coeff(0) * scale;
  cv.b3 = den.coeff(3) * scale;
  cv.b2 = den.coeff(2) * scale;
  cv.b1 = den.coeff(1) * scale;
  cv.b4 = 1;
  return cv;
}

CoefficientVector extract_theorem5_coeffs(const RationalFunction& y) {
  return extract_theorem5_coeffs(y.num(), y.den());
}

CoefficientVector extract_theorem6_coeffs(const Poly& num, const Poly& den) {
  if (den.degree() < 1 || den.degree() > 3) {
    throw Error(ErrorKind::ShapeMismatch,
                "cubic form needs a denominator of degree 1..3, got degree " + std::to_string(den.degree()));
  }
  if (!den.coeff(0).is_zero()) throw Error(ErrorKind::ShapeMismatch, "denominator must vanish at s = 0");
  if (num.degree() > 3) throw Error(ErrorKind::ShapeMismatch, "numerator degree exceeds 3");
  CoefficientVector cv;
  cv.a3 = num.coeff(3);
  cv.a2 = num.coeff(2);
  cv.a1 = num.coeff(1);
  cv.a0 = num.coeff(0);
  cv.b3 = den.coeff(3);
  cv.b2 = den.coeff(2);
  cv.b1 = den.coeff(1);
  cv.b4 = 0;
  return cv;
}

CoefficientVector extract_theorem6_coeffs(const RationalFunction& y) {
  return extract_theorem6_coeffs(y.num(), y.den());
}

}  // namespace mechsynth
