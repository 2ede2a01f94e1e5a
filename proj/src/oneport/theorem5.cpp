#include "mechsynth/oneport.hpp"

#include <tuple>

namespace mechsynth {

namespace {

void require_quartic(const CoefficientVector& cv) {
  if (cv.b4 != 1) throw Error(ErrorKind::WrongForm, "expected the quartic form (b4 = 1), got " + cv.str());
}

void require_nonnegative(const CoefficientVector& cv) {
  if (!cv.all_nonnegative()) {
    throw Error(ErrorKind::NonnegativityViolation, "coefficients must be non-negative: " + cv.str());
  }
}

Rat sqrt_or_throw(const Rat& v, const char* name) {
  auto r = v.sqrt();
  if (!r) throw Error(ErrorKind::IrrationalElement, std::string(name) + " = " + v.str() + " is not a rational square");
  return *r;
}

}  // namespace

bool WQuantities::admissible() const {
  return w1.sign() >= 0 && w2.sign() >= 0 && w3.sign() >= 0 && w * w == Rat(4) * w1 * w2 * w3;
}

WQuantities w_quantities(const CoefficientVector& cv) {
  require_quartic(cv);
  WQuantities q;
  q.w1 = cv.a3 * cv.b3 - cv.a2;
  q.w2 = cv.a3 * cv.b2 - cv.a1;
  q.w3 = cv.b2 * cv.b3 - cv.b1;
  q.w = cv.a0 + Rat(2) * cv.a3 * cv.b2 * cv.b3 - cv.a3 * cv.b1 - cv.a2 * cv.b2 - cv.a1 * cv.b3;
  return q;
}

PortMatrix3 build_G(const CoefficientVector& cv) {
  WQuantities q = w_quantities(cv);
  if (!q.admissible()) {
    throw Error(ErrorKind::Inadmissible, "W1, W2, W3 >= 0 and W^2 = 4 W1 W2 W3 fail for " + cv.str());
  }
  PortMatrix3 g;
  g.y11 = cv.a3;
  g.y22 = cv.b3;
  g.y33 = cv.b2;
  g.y12 = sqrt_or_throw(q.w1, "W1");
  g.y13 = sqrt_or_throw(q.w2, "W2");
  g.y23 = sqrt_or_throw(q.w3, "W3");
  if (q.w.sign() < 0) g.y23 = -g.y23;
  return g;
}

CoefficientVector coeffs_from_G(const PortMatrix3& g) {
  AlphaBeta ab = alpha_beta(g);
  return {ab.a3, ab.a2, ab.a1, ab.a0, ab.b3, ab.b2, ab.b1, 1};
}

char to_char(Fig2Case c) { return static_cast<char>('a' + static_cast<int>(c)); }

std::optional<Fig2Case> parse_fig2_case(char c) {
  if (c < 'a' || c > 'd') return std::nullopt;
  return static_cast<Fig2Case>(c - 'a');
}

std::string Theorem5Result::describe() const {
  switch (kind) {
    case Kind::Cond1: {
      std::string out = "Theorem 5 Condition 1 (";
      for (std::size_t i = 0; i < witnesses.size(); ++i) out += (i ? ", " : "") + witnesses[i] + "=0";
      return out + ")";
    }
    case Kind::Cond2: return std::string("Theorem 5 Condition 2(") + to_char(*fig2_case) + ")";
    case Kind::Reject: break;
  }
  return "reject: " + reason;
}

Theorem5Result classify_theorem5(const CoefficientVector& cv) {
  require_quartic(cv);
  require_nonnegative(cv);
  WQuantities q = w_quantities(cv);
  Theorem5Result out;
  if (!q.admissible()) {
    out.reason = "W1=" + q.w1.str() + ", W2=" + q.w2.str() + ", W3=" + q.w3.str() + ", W=" + q.w.str() +
                 " violate W1, W2, W3 >= 0 and W^2 = 4 W1 W2 W3";
    return out;
  }
  const std::pair<const char*, const Rat*> plain[] = {
      {"alpha1", &cv.a1}, {"alpha2", &cv.a2}, {"alpha3", &cv.a3}, {"beta1", &cv.b1}, {"beta2", &cv.b2},
      {"beta3", &cv.b3},  {"W1", &q.w1},      {"W2", &q.w2},      {"W3", &q.w3}};
  for (const auto& [name, v] : plain) {
    if (v->is_zero()) out.witnesses.emplace_back(name);
  }
  // x - W/(2 Wi) = 0 tested as 2 Wi x - W = 0 with Wi != 0.
  const std::tuple<const char*, const Rat*, const Rat*> ratio[] = {
      {"beta2-W/(2W1)", &q.w1, &cv.b2}, {"beta3-W/(2W2)", &q.w2, &cv.b3}, {"alpha3-W/(2W3)", &q.w3, &cv.a3}};
  for (const auto& [name, wi, x] : ratio) {
    if (!wi->is_zero() && (Rat(2) * *wi * *x - q.w).is_zero()) out.witnesses.emplace_back(name);
  }
  if (!out.witnesses.empty()) {
    out.kind = Theorem5Result::Kind::Cond1;
    return out;
  }
  const Rat p = cv.a3 * cv.b1, m = cv.a2 * cv.b2, n = cv.a1 * cv.b3;
  if (q.w.sign() < 0 && cv.a0.is_zero()) {
    out.fig2_case = Fig2Case::A;
  } else if (q.w.sign() > 0 && (cv.a0 + p + m - n).is_zero()) {
    out.fig2_case = Fig2Case::B;
  } else if (q.w.sign() > 0 && (cv.a0 + p + n - m).is_zero()) {
    out.fig2_case = Fig2Case::C;
  } else if (q.w.sign() > 0 && (cv.a0 + n + m - p).is_zero()) {
    out.fig2_case = Fig2Case::D;
  }
  if (out.fig2_case) {
    out.kind = Theorem5Result::Kind::Cond2;
  } else {
    out.reason = "no Condition-1 quantity vanishes and none of the Condition-2 identities holds (W=" + q.w.str() + ")";
  }
  return out;
}

Fig2Values fig2_values(const CoefficientVector& cv, Fig2Case which) {
  Theorem5Result t = classify_theorem5(cv);
  if (t.kind != Theorem5Result::Kind::Cond2 || *t.fig2_case != which) {
    throw Error(ErrorKind::BranchMismatch, std::string("case (") + to_char(which) + ") requested but " + cv.str() +
                                               " classifies as " + t.describe());
  }
  const WQuantities q = w_quantities(cv);
  const Rat& W = q.w;
  const Rat two(2);
  Fig2Values v;
  switch (which) {
    case Fig2Case::A: {
      Rat d = cv.b3 - W / (two * q.w2);
      Rat e = cv.a3 - W / (two * q.w3);
      v.k1 = cv.a2 / d;
      v.k2 = q.w3 * e * cv.a2 / (q.w2 * d * d);
      v.k3 = W * (-e) / (two * q.w2 * d);
      v.b = cv.a2 * cv.a2 / (q.w2 * d * d);
      v.c = q.w3 * e * e / (q.w2 * d * d);
      break;
    }
    case Fig2Case::B:
      v.k1 = cv.a3 * q.w3 * (cv.a3 - W / (two * q.w3)) / (cv.b2 * q.w1);
      v.k2 = cv.a3 * W / (two * cv.b2 * q.w1);
      v.k3 = cv.a3 * (cv.b2 - W / (two * q.w1)) / cv.b2;
      v.b = cv.a3 * cv.a3 * q.w3 / (cv.b2 * cv.b2 * q.w1);
      v.c = cv.a3 * cv.a3 / q.w1;
      break;
    case Fig2Case::C:
      v.k1 = cv.a3 * q.w3 * (cv.a3 - W / (two * q.w3)) / (cv.b3 * q.w2);
      v.k2 = cv.a3 * W / (two * cv.b3 * q.w2);
      v.k3 = cv.a3 * (cv.b3 - W / (two * q.w2)) / cv.b3;
      v.b = cv.a3 * cv.a3 / q.w2;
      v.c = cv.a3 * cv.a3 * q.w3 / (cv.b3 * cv.b3 * q.w2);
      break;
    case Fig2Case::D:
      v.k1 = q.w1 * (cv.b2 - W / (two * q.w1)) / (cv.b2 * cv.b3);
      v.k2 = W / (two * cv.b2 * cv.b3);
      v.k3 = q.w2 * (cv.b3 - W / (two * q.w2)) / (cv.b2 * cv.b3);
      v.b = q.w2 / (cv.b2 * cv.b2);
      v.c = q.w1 / (cv.b3 * cv.b3);
      break;
  }
  return v;
}

}  // namespace mechsynth
