#include <optional>

#include "mechsynth/oneport.hpp"

namespace mechsynth {

namespace {

constexpr int kMaxDepth = 6;

struct Budget {
  int springs = 3, dampers = 1, inerters = 1;

  bool take(ElementKind k) {
    int& slot = k == ElementKind::Spring ? springs : (k == ElementKind::Damper ? dampers : inerters);
    if (slot == 0) return false;
    --slot;
    return true;
  }
};

// What a step extracts: one element, or a spring-inerter tank (series pair
// as a shunt branch, parallel pair as a series block).
struct Block {
  enum Shape { Single, SeriesPair, ParallelPair } shape = Single;
  ElementKind kind = ElementKind::Spring;
  Rat value;
  Rat spring, inerter;  // tanks only
};

struct Step {
  bool parallel;
  Block block;
};

bool nonneg_coeffs(const RationalFunction& f) {
  for (const auto* p : {&f.num(), &f.den()}) {
    for (const Rat& c : p->coeffs()) {
      if (c.sign() < 0) return false;
    }
  }
  return !f.is_zero();
}

// f(0) when finite.
std::optional<Rat> at_zero(const RationalFunction& f) {
  if (f.den().coeff(0).is_zero()) return std::nullopt;
  return f.num().coeff(0) / f.den().coeff(0);
}

// f(inf) when finite.
std::optional<Rat> at_infinity(const RationalFunction& f) {
  if (f.num().degree() > f.den().degree()) return std::nullopt;
  if (f.num().degree() < f.den().degree()) return Rat(0);
  return f.num().lead() / f.den().lead();
}

// Residue at a simple pole at 0 (coefficient of 1/s).
std::optional<Rat> residue_at_zero(const RationalFunction& f) {
  const Poly& d = f.den();
  if (!d.coeff(0).is_zero() || d.coeff(1).is_zero()) return std::nullopt;
  return f.num().coeff(0) / d.coeff(1);
}

// Coefficient of s at a simple pole at infinity.
std::optional<Rat> residue_at_infinity(const RationalFunction& f) {
  if (f.num().degree() != f.den().degree() + 1) return std::nullopt;
  return f.num().lead() / f.den().lead();
}

// w^2 for a single pole pair at s = +-jw with w^2 rational, if any. Roots of
// d on the imaginary axis are the common roots x = -w^2 of its even and odd
// parts d(s) = e(s^2) + s o(s^2).
std::optional<Rat> imaginary_pole(const Poly& d) {
  std::vector<Rat> e, o;
  for (int i = 0; i <= d.degree(); ++i) (i % 2 ? o : e).push_back(d.coeff(i));
  Poly g = gcd(Poly(e), Poly(o));
  while (g.degree() > 0 && g.coeff(0).is_zero()) g = exact_div(g, Poly::s());
  if (g.degree() != 1) return std::nullopt;
  Rat w2 = g.coeff(0) / g.coeff(1);
  if (w2.sign() <= 0) return std::nullopt;
  return w2;
}

// A with f = A s/(s^2 + w2) + (no pole at +-jw), when A is real.
std::optional<Rat> tank_residue(const RationalFunction& f, const Rat& w2) {
  Poly q{w2, Rat(0), Rat(1)};
  auto [d1, rem] = divmod(f.den(), q);
  if (!rem.is_zero()) return std::nullopt;
  // Reduce num and s*d1 modulo q to u0 + u1 s, v0 + v1 s.
  Poly n = divmod(f.num(), q).second;
  Poly v = divmod(Poly::s() * d1, q).second;
  if (v.is_zero()) return std::nullopt;
  Rat a = v.coeff(1).is_zero() ? n.coeff(0) / v.coeff(0) : n.coeff(1) / v.coeff(1);
  if (n.coeff(0) != a * v.coeff(0) || n.coeff(1) != a * v.coeff(1)) return std::nullopt;
  return a;
}

Block single(ElementKind kind, const Rat& value) {
  Block b;
  b.kind = kind;
  b.value = value;
  return b;
}

RationalFunction block_admittance(const Block& b) {
  auto spring = [](const Rat& k) { return RationalFunction(Poly(k), Poly::s()); };
  auto inerter = [](const Rat& m) { return RationalFunction(Poly::monomial(m, 1)); };
  switch (b.shape) {
    case Block::SeriesPair: return (spring(b.spring).inverse() + inerter(b.inerter).inverse()).inverse();
    case Block::ParallelPair: return spring(b.spring) + inerter(b.inerter);
    case Block::Single: break;
  }
  switch (b.kind) {
    case ElementKind::Spring: return spring(b.value);
    case ElementKind::Inerter: return inerter(b.value);
    default: return RationalFunction(b.value);
  }
}

bool take(Budget& budget, const Block& b) {
  if (b.shape == Block::Single) return budget.take(b.kind);
  return budget.take(ElementKind::Spring) && budget.take(ElementKind::Inerter);
}

// Single element whose admittance is exactly y.
std::optional<Block> as_element(const RationalFunction& y) {
  const Poly& n = y.num();
  const Poly& d = y.den();
  if (n.degree() == 0 && d.degree() == 0 && n.lead().sign() > 0) return single(ElementKind::Damper, n.lead());
  if (n.degree() == 0 && d == Poly::s() && n.lead().sign() > 0) return single(ElementKind::Spring, n.lead());
  if (n.degree() == 1 && n.coeff(0).is_zero() && d.degree() == 0 && n.lead().sign() > 0) {
    return single(ElementKind::Inerter, n.lead());
  }
  return std::nullopt;
}

// Candidate extractions from y, in a fixed order.
std::vector<Step> candidates(const RationalFunction& y) {
  std::vector<Step> out;
  auto add = [&](bool parallel, ElementKind kind, const std::optional<Rat>& v) {
    if (v && v->sign() > 0) out.push_back({parallel, single(kind, *v)});
  };
  auto add_tank = [&](bool parallel, const RationalFunction& f) {
    auto w2 = imaginary_pole(f.den());
    if (!w2) return;
    auto a = tank_residue(f, *w2);
    if (!a || a->sign() <= 0) return;
    Block b;
    if (parallel) {
      // Shunt branch k in series with m: admittance k s/(s^2 + k/m).
      b.shape = Block::SeriesPair;
      b.spring = *a;
      b.inerter = *a / *w2;
    } else {
      // Series block k parallel m: impedance (1/m) s/(s^2 + k/m).
      b.shape = Block::ParallelPair;
      b.inerter = a->inverse();
      b.spring = *w2 * b.inerter;
    }
    out.push_back({parallel, b});
  };
  add(true, ElementKind::Spring, residue_at_zero(y));
  add(true, ElementKind::Inerter, residue_at_infinity(y));
  add_tank(true, y);
  add(true, ElementKind::Damper, at_zero(y));
  add(true, ElementKind::Damper, at_infinity(y));
  RationalFunction z = y.inverse();
  // Impedance of an inerter is 1/(b s), of a spring s/k, of a damper 1/c.
  if (auto r = residue_at_zero(z); r && r->sign() > 0) add(false, ElementKind::Inerter, r->inverse());
  if (auto r = residue_at_infinity(z); r && r->sign() > 0) add(false, ElementKind::Spring, r->inverse());
  add_tank(false, z);
  if (auto r = at_zero(z); r && r->sign() > 0) add(false, ElementKind::Damper, r->inverse());
  if (auto r = at_infinity(z); r && r->sign() > 0) add(false, ElementKind::Damper, r->inverse());
  return out;
}

bool search(const RationalFunction& y, int depth, Budget budget, std::vector<Step>& path) {
  if (auto leaf = as_element(y)) {
    if (!budget.take(leaf->kind)) return false;
    path.push_back({true, *leaf});
    return true;
  }
  if (depth == kMaxDepth - 1) return false;
  for (const Step& st : candidates(y)) {
    Budget left = budget;
    if (!take(left, st.block)) continue;
    RationalFunction e = block_admittance(st.block);
    RationalFunction rest;
    if (st.parallel) {
      rest = y - e;
    } else {
      RationalFunction zr = y.inverse() - e.inverse();
      rest = zr.is_zero() ? RationalFunction() : zr.inverse();
    }
    if (rest.is_zero()) {
      // Only a tank can leave nothing behind; single elements end as leaves.
      if (st.block.shape == Block::Single) continue;
      path.push_back({true, st.block});
      return true;
    }
    if (!nonneg_coeffs(rest)) continue;
    path.push_back(st);
    if (search(rest, depth + 1, left, path)) return true;
    path.pop_back();
  }
  return false;
}

void place(const Block& b, int from, int to, int& next, MechNetwork& net) {
  switch (b.shape) {
    case Block::Single: net.elements.push_back({b.kind, b.value, from, to, {}}); return;
    case Block::ParallelPair:
      net.elements.push_back({ElementKind::Spring, b.spring, from, to, {}});
      net.elements.push_back({ElementKind::Inerter, b.inerter, from, to, {}});
      return;
    case Block::SeriesPair: {
      int mid = next++;
      net.nodes.push_back(mid);
      net.elements.push_back({ElementKind::Spring, b.spring, from, mid, {}});
      net.elements.push_back({ElementKind::Inerter, b.inerter, mid, to, {}});
      return;
    }
  }
}

}  // namespace

MechNetwork foster_synthesize(const RationalFunction& y) {
  std::vector<Step> path;
  if (!nonneg_coeffs(y) || !search(y, 0, Budget{}, path)) {
    throw Error(ErrorKind::CensusExceeded, "no preamble ordering realizes " + y.str() +
                                               " with at most 3 springs, 1 damper and 1 inerter");
  }
  MechNetwork net;
  net.nodes = {0, 1};
  net.ports = {{1, 0}};
  int a = 1, next = 2;
  for (const Step& st : path) {
    if (st.parallel) {
      place(st.block, a, 0, next, net);
    } else {
      int b = next++;
      net.nodes.push_back(b);
      place(st.block, a, b, next, net);
      a = b;
    }
  }
  if (driving_point(net) != y) {
    throw Error(ErrorKind::OracleMismatch, "preamble network for " + y.str() + " has admittance " + driving_point(net).str());
  }
  return net;
}

}  // namespace mechsynth
