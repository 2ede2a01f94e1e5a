#include "mechsynth/oneport.hpp"

namespace mechsynth {

namespace {

struct Entries {
  Rat g1, g2, g3, g4, g5, g6;
  explicit Entries(const PortMatrix3& g) : g1(g.y11), g2(g.y22), g3(g.y33), g4(g.y12), g5(g.y13), g6(g.y23) {}
};

// Named quantities of a G matrix; nullopt for m-ratios with a zero divisor.
std::optional<Rat> quantity(const PortMatrix3& g, const std::string& name) {
  Entries e(g);
  RegionQuantities q = region_quantities(g);
  if (name == "m1") return q.m1;
  if (name == "m1dag") return q.m1dag;
  if (name == "m2") return q.m2;
  if (name == "m2dag") return q.m2dag;
  if (name == "m3") return q.m3;
  if (name == "lambda1") return q.lambda1;
  if (name == "lambda2") return q.lambda2;
  if (name == "lambda3") return q.lambda3;
  if (name == "lambda4") return q.lambda4;
  if (name == "G1") return e.g1;
  if (name == "G2") return e.g2;
  if (name == "G3") return e.g3;
  if (name == "G4") return e.g4;
  if (name == "minor12") return e.g1 * e.g2 - e.g4 * e.g4;
  if (name == "minor13") return e.g1 * e.g3 - e.g5 * e.g5;
  if (name == "minor23") return e.g2 * e.g3 - e.g6 * e.g6;
  return std::nullopt;
}

}  // namespace

int arbitrary_condition(const CoefficientVector& cv) {
  WQuantities q = w_quantities(cv);
  if (!q.admissible()) return 0;
  const Rat& W = q.w;
  if (W.sign() < 0) return 1;
  if (W.sign() == 0) return 0;
  // With W > 0 every W_i is positive; x - W/(2 W_i) has the sign of 2 W_i x - W.
  const int gap1 = (Rat(2) * q.w1 * cv.b2 - W).sign();  // b2 - W/(2W1)
  const int gap2 = (Rat(2) * q.w2 * cv.b3 - W).sign();  // b3 - W/(2W2)
  const int gap3 = (Rat(2) * q.w3 * cv.a3 - W).sign();  // a3 - W/(2W3)
  const Rat p = cv.a3 * cv.b1, m = cv.a2 * cv.b2, n = cv.a1 * cv.b3;
  if (gap3 > 0 && gap2 > 0 && gap1 > 0) return 2;
  if (gap1 < 0 && (cv.a0 + p + n - m).sign() >= 0) return 3;
  if (gap2 < 0 && (cv.a0 + p + m - n).sign() >= 0) return 4;
  if (gap3 < 0 && (cv.a0 + n + m - p).sign() >= 0) return 5;
  return 0;
}

std::string ArbitraryResult::describe() const {
  switch (kind) {
    case Kind::AtMostThree: return "at most three springs: " + branch;
    case Kind::ArbitraryOnly: return "arbitrary springs only: condition " + std::to_string(condition);
    case Kind::NotRealizable: break;
  }
  return "not realizable: " + reason;
}

ArbitraryResult classify_arbitrary_springs(const CoefficientVector& cv) {
  if (!cv.all_nonnegative()) {
    throw Error(ErrorKind::NonnegativityViolation, "coefficients must be non-negative: " + cv.str());
  }
  ArbitraryResult out;
  if (cv.b4 == 0) {
    Theorem6Result t = classify_theorem6(cv, Theorem6Mode::ScaleSearch);
    if (t.accepted()) {
      out.kind = ArbitraryResult::Kind::AtMostThree;
      out.branch = t.describe();
    } else {
      out.reason = t.reason;
    }
    return out;
  }
  Theorem5Result t = classify_theorem5(cv);
  if (t.accepted()) {
    out.kind = ArbitraryResult::Kind::AtMostThree;
    out.branch = t.describe();
    return out;
  }
  if (!w_quantities(cv).admissible()) {
    out.reason = t.reason;
    return out;
  }
  out.condition = arbitrary_condition(cv);
  if (out.condition) {
    out.kind = ArbitraryResult::Kind::ArbitraryOnly;
  } else {
    out.reason = "admissible, but neither the Condition-1 witnesses nor any of the five conditions hold";
  }
  return out;
}

RegionQuantities region_quantities(const PortMatrix3& g) {
  Entries e(g);
  RegionQuantities q;
  q.m1 = e.g6;
  q.m1dag = e.g5;
  if (!e.g5.is_zero()) q.m2 = e.g2 - e.g4 * e.g6 / e.g5;
  if (!e.g6.is_zero()) q.m2dag = e.g1 - e.g4 * e.g5 / e.g6;
  if (!e.g4.is_zero()) q.m3 = e.g3 - e.g5 * e.g6 / e.g4;
  Rat base = e.g1 * e.g2 * e.g3 + e.g4 * e.g5 * e.g6;
  q.lambda1 = base - e.g1 * e.g6 * e.g6 - e.g2 * e.g5 * e.g5;
  q.lambda2 = base - e.g1 * e.g6 * e.g6 - e.g3 * e.g4 * e.g4;
  q.lambda3 = base - e.g3 * e.g4 * e.g4 - e.g2 * e.g5 * e.g5;
  q.lambda4 = g.det();
  return q;
}

std::string_view to_string(RegionClass c) {
  switch (c) {
    case RegionClass::NotRealizable: return "not-realizable";
    case RegionClass::ArbitrarySprings: return "arbitrary-springs";
    case RegionClass::AtMostThreeBoundary: return "at-most-three-boundary";
    case RegionClass::AtMostThreeInteriorSegment: return "at-most-three-interior-segment";
  }
  return "?";
}

RegionPoint classify_region(const PortMatrix3& g) {
  for (const char* name : {"G1", "G2", "G3", "minor12", "minor13", "minor23", "lambda4"}) {
    if (quantity(g, name)->sign() < 0) return {RegionClass::NotRealizable, name};
  }
  // A vanishing first- or second-order minor. The off-diagonal ones are the
  // m-lines crossing the region; diagonal entries and principal minors lie on
  // its edge.
  for (const char* name : {"m1", "m1dag", "m2", "m2dag", "m3", "G4"}) {
    auto v = quantity(g, name);
    if (v && v->is_zero()) return {RegionClass::AtMostThreeInteriorSegment, name};
  }
  for (const char* name : {"G1", "G2", "G3", "minor12", "minor13", "minor23"}) {
    if (quantity(g, name)->is_zero()) return {RegionClass::AtMostThreeBoundary, name};
  }
  RegionQuantities q = region_quantities(g);
  const int triple = (g.y12 * g.y13 * g.y23).sign();
  if (triple < 0 && q.lambda4.is_zero()) return {RegionClass::AtMostThreeBoundary, "lambda4"};
  if (triple > 0) {
    if (q.lambda1.is_zero()) return {RegionClass::AtMostThreeBoundary, "lambda1"};
    if (q.lambda2.is_zero()) return {RegionClass::AtMostThreeBoundary, "lambda2"};
    if (q.lambda3.is_zero()) return {RegionClass::AtMostThreeBoundary, "lambda3"};
  }
  if (triple < 0) return {RegionClass::ArbitrarySprings, "condition1"};
  const int m2 = q.m2->sign(), m2dag = q.m2dag->sign(), m3 = q.m3->sign();
  if (m2dag > 0 && m2 > 0 && m3 > 0) return {RegionClass::ArbitrarySprings, "condition2"};
  if (m3 < 0 && q.lambda1.sign() >= 0) return {RegionClass::ArbitrarySprings, "condition3"};
  if (m2 < 0 && q.lambda2.sign() >= 0) return {RegionClass::ArbitrarySprings, "condition4"};
  if (m2dag < 0 && q.lambda3.sign() >= 0) return {RegionClass::ArbitrarySprings, "condition5"};
  return {RegionClass::NotRealizable, "none"};
}

std::optional<Rat> region_witness_value(const PortMatrix3& g, const std::string& name) { return quantity(g, name); }

}  // namespace mechsynth
