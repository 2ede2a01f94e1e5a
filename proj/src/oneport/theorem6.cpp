#include "detail.hpp"
#include "mechsynth/oneport.hpp"

namespace mechsynth {

namespace {

MechNetwork one_port(int nodes, std::vector<Element> elements) {
  MechNetwork net;
  for (int v = 0; v < nodes; ++v) net.nodes.push_back(v);
  net.elements = std::move(elements);
  net.ports = {{1, 0}};
  return net;
}

Element role(ElementKind k, int a, int b, const char* name) { return {k, Rat(1), a, b, name}; }

// Cubic-form topologies, port across nodes 1 (plus) and 0.
MechNetwork fig3_topology(int condition) {
  using K = ElementKind;
  switch (condition) {
    case 1: return one_port(2, {role(K::Inerter, 1, 0, "b"), role(K::Damper, 1, 0, "c"), role(K::Spring, 1, 0, "k1")});
    case 2:
      return one_port(3, {role(K::Spring, 1, 0, "k1"), role(K::Spring, 1, 2, "k2"), role(K::Spring, 2, 0, "k3"),
                          role(K::Inerter, 2, 0, "b"), role(K::Damper, 2, 0, "c")});
    case 3:
      return one_port(3, {role(K::Damper, 1, 0, "c"), role(K::Spring, 1, 0, "k1"), role(K::Spring, 1, 2, "k2"),
                          role(K::Spring, 2, 0, "k3"), role(K::Inerter, 2, 0, "b")});
    case 4:
      return one_port(3, {role(K::Inerter, 1, 0, "b"), role(K::Spring, 1, 0, "k1"), role(K::Spring, 1, 2, "k2"),
                          role(K::Spring, 2, 0, "k3"), role(K::Damper, 2, 0, "c")});
    case 5:
      return one_port(3, {role(K::Spring, 1, 0, "k1"), role(K::Inerter, 1, 2, "b"), role(K::Spring, 1, 2, "k3"),
                          role(K::Damper, 2, 0, "c"), role(K::Spring, 2, 0, "k2")});
    default: break;
  }
  throw Error(ErrorKind::UsageError, "Theorem 6 condition must be 1..5, got " + std::to_string(condition));
}

void require_cubic(const CoefficientVector& cv) {
  if (cv.b4 != 0) throw Error(ErrorKind::WrongForm, "expected the cubic form (b4 = 0), got " + cv.str());
  if (!cv.all_nonnegative()) {
    throw Error(ErrorKind::NonnegativityViolation, "coefficients must be non-negative: " + cv.str());
  }
}

bool pos(const Rat& r) { return r.sign() > 0; }
bool nonneg(const Rat& r) { return r.sign() >= 0; }

// Conditions 2-4 share one shape after renaming:
//   (x, y, p, q) = (a1, b2, a2, b3) for 2, (a2, b3, a1, b2) for 3, (a1, b2, a3, b1) for 4,
// with the invariant x q = p y (condition 4 reads a3 b1 = a2 b2), the radicand
// r = (x b1 - a0 y)/y = k2^2 and S = x/y = k1 + k2.
struct Shape {
  Rat x, y;
  bool zero_pattern;
  bool invariant;
};

Shape shape_of(const CoefficientVector& cv, int condition) {
  switch (condition) {
    case 2: return {cv.a1, cv.b2, cv.a3.is_zero() && pos(cv.b2) && pos(cv.b3), cv.a1 * cv.b3 == cv.a2 * cv.b2};
    case 3: return {cv.a2, cv.b3, cv.b2.is_zero() && pos(cv.a3) && pos(cv.b3), cv.a1 * cv.b3 == cv.a3 * cv.b1};
    default: return {cv.a1, cv.b2, cv.b3.is_zero() && pos(cv.a3) && pos(cv.b2), cv.a3 * cv.b1 == cv.a2 * cv.b2};
  }
}

int zero_pattern_condition(const CoefficientVector& cv) {
  if (cv.a3.is_zero() && cv.b2.is_zero() && cv.b3.is_zero()) return 1;
  for (int c : {2, 3, 4}) {
    if (shape_of(cv, c).zero_pattern) return c;
  }
  if (pos(cv.a3) && pos(cv.b2) && pos(cv.b3)) return 5;
  return 0;
}

}  // namespace

TwoPortSpring two_port_spring(const Rat& k11, const Rat& k12, const Rat& k22) {
  Rat m = k12.abs();
  if (k11 < m || k22 < m) {
    throw Error(ErrorKind::NotParamount, "K = [[" + k11.str() + "," + k12.str() + "],[" + k12.str() + "," + k22.str() +
                                             "]] needs K11 >= |K12| and K22 >= |K12|");
  }
  TwoPortSpring out;
  out.k1 = k11 - m;
  out.k2 = m;
  out.k3 = k22 - m;
  out.flipped = k12.sign() < 0;
  MechNetwork topo;
  topo.nodes = {0, 1, 2};
  topo.ports = {{1, 0}, out.flipped ? Port{2, 0} : Port{0, 2}};
  topo.elements = {role(ElementKind::Spring, 1, 0, "k1"), role(ElementKind::Spring, 1, 2, "k2"),
                   role(ElementKind::Spring, 0, 2, "k3")};
  out.network = detail::assign_roles(topo, std::map<std::string, Rat>{{"k1", out.k1}, {"k2", out.k2}, {"k3", out.k3}});
  RfMatrix<Rat> y = admittance_matrix(out.network);
  RationalFunction inv_s(Poly(Rat(1)), Poly::s());
  if (y[0][0] != inv_s * RationalFunction(k11) || y[0][1] != inv_s * RationalFunction(k12) ||
      y[1][1] != inv_s * RationalFunction(k22)) {
    throw Error(ErrorKind::OracleMismatch, "two-port spring network does not reproduce K");
  }
  return out;
}

bool theorem6_condition_holds(const CoefficientVector& cv, int condition) {
  const Rat &a3 = cv.a3, &a2 = cv.a2, &a1 = cv.a1, &a0 = cv.a0, &b3 = cv.b3, &b2 = cv.b2, &b1 = cv.b1;
  switch (condition) {
    case 1: return a3.is_zero() && b2.is_zero() && b3.is_zero() && pos(a1) && pos(a2) && pos(b1);
    case 2:
      return a3.is_zero() && pos(b2) && pos(b3) && nonneg(a1 * b1 - a0 * b2) && a1 * a1 + a0 * b2 * b2 >= a1 * b1 * b2 &&
             a0 * b2 + b2 * b1 * b1 >= a1 * b1 && a1 * b3 == a2 * b2;
    case 3:
      return b2.is_zero() && pos(a3) && pos(b3) && nonneg(a2 * b1 - a0 * b3) && a2 * a2 + a0 * b3 * b3 >= a2 * b1 * b3 &&
             a0 * b3 + b3 * b1 * b1 >= a2 * b1 && a1 * b3 == a3 * b1;
    case 4:
      return b3.is_zero() && pos(a3) && pos(b2) && nonneg(a1 * b1 - a0 * b2) && a1 * a1 + a0 * b2 * b2 >= a1 * b1 * b2 &&
             a0 * b2 + b2 * b1 * b1 >= a1 * b1 && a3 * b1 == a2 * b2;
    case 5: {
      if (!(pos(a3) && pos(b2) && pos(b3))) return false;
      Rat p = a1 * b3, q = a2 * b2, t = a3 * b1;
      return p + q >= t && q + t >= p && p + t >= q && a3 == b2 * b3 &&
             p * p + q * q + t * t + Rat(4) * a0 * a3 * a3 == Rat(2) * (p * q + q * t + t * p);
    }
    default: return false;
  }
}

std::string Theorem6Result::describe() const {
  if (!condition) return "reject: " + reason;
  return "Theorem 6 Condition " + std::to_string(*condition) + ", λ=" + lambda.str();
}

Theorem6Result classify_theorem6(const CoefficientVector& cv, Theorem6Mode mode) {
  require_cubic(cv);
  Theorem6Result out;
  if (cv.a3.is_zero() && cv.a2.is_zero() && cv.a1.is_zero() && cv.a0.is_zero()) {
    out.reason = "the numerator is identically zero";
    return out;
  }
  const int c = zero_pattern_condition(cv);
  if (c == 0) {
    out.reason = "the zero pattern of (a3, b3, b2) fits none of the five conditions";
    return out;
  }
  if (mode == Theorem6Mode::AsWritten || c == 1) {
    if (theorem6_condition_holds(cv, c)) {
      out.condition = c;
    } else {
      out.reason = "Condition " + std::to_string(c) + " fails on the literal coefficients";
    }
    return out;
  }
  if (c == 5) {
    // b c = lambda a3 with b = lambda b3, c = lambda b2 forces the scale.
    Rat lambda = cv.a3 / (cv.b2 * cv.b3);
    if (theorem6_condition_holds(cv.scaled(lambda), 5)) {
      out.condition = 5;
      out.lambda = lambda;
    } else {
      out.reason = "Condition 5 fails at the forced scale λ=" + lambda.str();
    }
    return out;
  }
  Shape sh = shape_of(cv, c);
  Rat r = (sh.x * cv.b1 - cv.a0 * sh.y) / sh.y;
  if (!sh.invariant || r.sign() < 0) {
    out.reason = "Condition " + std::to_string(c) + (sh.invariant ? " needs a non-negative k2 radicand" : " equality fails");
    return out;
  }
  // k2 = sqrt(lambda r) must lie in [r/b1, S] for k1, k3 >= 0. Keep the literal
  // scale when its k2 is rational, otherwise take k2 at the midpoint.
  Rat lambda(1);
  if (!r.is_zero() && !(theorem6_condition_holds(cv, c) && r.sqrt())) {
    Rat t = (r / cv.b1 + sh.x / sh.y) / Rat(2);
    lambda = t * t / r;
  }
  if (!theorem6_condition_holds(cv.scaled(lambda), c)) {
    throw Error(ErrorKind::InternalInvariant, "scale " + lambda.str() + " misses Condition " + std::to_string(c) +
                                                  " for " + cv.str());
  }
  out.condition = c;
  out.lambda = lambda;
  return out;
}

SynthesisResult synth_fig3(const CoefficientVector& cv, int condition, const Rat& lambda, bool exact) {
  require_cubic(cv);
  if (lambda.sign() <= 0) throw Error(ErrorKind::UsageError, "scale must be positive, got " + lambda.str());
  const CoefficientVector s = cv.scaled(lambda);
  if (!theorem6_condition_holds(s, condition)) {
    throw Error(ErrorKind::BranchMismatch,
                "Condition " + std::to_string(condition) + " does not hold for " + cv.str() + " at λ=" + lambda.str());
  }
  std::map<std::string, Rat> v;
  std::optional<Rat> radicand;
  switch (condition) {
    case 1:
      v = {{"b", s.a2 / s.b1}, {"c", s.a1 / s.b1}, {"k1", s.a0 / s.b1}};
      break;
    case 2:
      radicand = (s.a1 * s.b1 - s.a0 * s.b2) / s.b2;
      v = {{"b", s.b3}, {"c", s.b2}, {"S", s.a1 / s.b2}};
      break;
    case 3:
      radicand = (s.a2 * s.b1 - s.a0 * s.b3) / s.b3;
      v = {{"b", s.b3}, {"c", s.a3 / s.b3}, {"S", s.a2 / s.b3}};
      break;
    case 4:
      radicand = (s.a1 * s.b1 - s.a0 * s.b2) / s.b2;
      v = {{"b", s.a3 / s.b2}, {"c", s.b2}, {"S", s.a1 / s.b2}};
      break;
    case 5: {
      Rat p = s.a1 * s.b3, q = s.a2 * s.b2, t = s.a3 * s.b1, d = Rat(2) * s.a3;
      v = {{"b", s.b3}, {"c", s.b2}, {"k1", (p + q - t) / d}, {"k2", (q - p + t) / d}, {"k3", (p - q + t) / d}};
      break;
    }
    default: fig3_topology(condition);
  }

  SynthesisResult res;
  res.branch = "Theorem 6 Condition " + std::to_string(condition);
  res.certificate = Json{{"condition", condition}, {"lambda", lambda.str()}};
  const MechNetwork topo = fig3_topology(condition);
  const RationalFunction target = cv.function();

  std::optional<Rat> k2;
  if (radicand) k2 = radicand->sqrt();
  if (!radicand || k2) {
    if (radicand) {
      Rat sum = v.at("S");
      v.erase("S");
      v["k2"] = *k2;
      v["k1"] = sum - *k2;
      v["k3"] = s.b1 - *k2;
    }
    Json values = Json::object();
    for (const auto& [name, value] : v) values[name] = value.str();
    res.certificate["values"] = values;
    res.netlist = detail::assign_roles(topo, v);
    if (driving_point(res.netlist) != target) {
      throw Error(ErrorKind::OracleMismatch, res.branch + " network has admittance " + driving_point(res.netlist).str());
    }
    res.verified = true;
    return res;
  }
  if (exact) {
    throw Error(ErrorKind::IrrationalElement, "k2 = sqrt(" + radicand->str() + ") is irrational");
  }
  Surd root = Surd::sqrt_of(*radicand);
  std::map<std::string, Surd> sv = {{"b", Surd(v.at("b"))},
                                    {"c", Surd(v.at("c"))},
                                    {"k1", Surd(v.at("S")) - root},
                                    {"k2", root},
                                    {"k3", Surd(s.b1) - root}};
  Json values = Json::object();
  for (const auto& [name, value] : sv) values[name] = value.str();
  res.certificate["values"] = values;
  res.surd_netlist = detail::assign_roles(topo, sv);
  auto lift = [](const Poly& p) {
    std::vector<Surd> c;
    for (const Rat& x : p.coeffs()) c.emplace_back(x);
    return Polynomial<Surd>(std::move(c));
  };
  if (driving_point(*res.surd_netlist) != RatFunc<Surd>(lift(target.num()), lift(target.den()))) {
    throw Error(ErrorKind::OracleMismatch, res.branch + " surd network does not reproduce " + target.str());
  }
  res.verified = true;
  return res;
}

}  // namespace mechsynth
