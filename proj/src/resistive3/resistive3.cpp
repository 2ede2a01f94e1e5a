#include "mechsynth/resistive3.hpp"

#include <algorithm>
#include <numeric>

namespace mechsynth {

namespace {

int count_zeros(const auto& values) {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [](const Rat& v) { return v.is_zero(); }));
}

Json rat_array(const auto& values) {
  Json out = Json::array();
  for (const Rat& v : values) out.push_back(v.str());
  return out;
}

// Six path conductances for a matrix whose off-diagonals are non-negative.
std::array<Rat, 6> path_conductances(const PortMatrix3& a) {
  return {a.y11 - a.y12,
          a.y12 - a.y13,
          a.y13,
          (a.y22 - a.y23) - (a.y12 - a.y13),
          a.y23 - a.y13,
          a.y33 - a.y23};
}

constexpr int kPathPairs[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

char case_for_middle(int port) { return port == 1 ? 'a' : (port == 2 ? 'b' : 'c'); }

LTreeCertificate ltree_quantities(const SignPattern& p, const PortMatrix3& m) {
  PortMatrix3 n = p.apply(m);
  LTreeCertificate c;
  c.pattern = p;
  c.offdiag = {n.y12.abs(), n.y13.abs(), n.y23.abs()};
  c.slack = {n.y11 - c.offdiag[0] - c.offdiag[1], n.y22 - c.offdiag[0] - c.offdiag[2],
             n.y33 - c.offdiag[1] - c.offdiag[2]};
  c.zero_count = count_zeros(c.offdiag) + count_zeros(c.slack);
  return c;
}

}  // namespace

bool LTreeCertificate::valid() const {
  if (zero_count < 3 || zero_count != count_zeros(offdiag) + count_zeros(slack)) return false;
  for (const Rat& v : offdiag) {
    if (v.sign() < 0) return false;
  }
  for (const Rat& v : slack) {
    if (v.sign() < 0) return false;
  }
  return pattern.d[0] == 1;
}

Json LTreeCertificate::to_json() const {
  return Json{{"pattern", pattern.str()},
              {"offdiag", rat_array(offdiag)},
              {"slack", rat_array(slack)},
              {"zero_count", zero_count}};
}

bool PTreeCertificate::valid() const {
  if (equality_count < 3 || equality_count != count_zeros(slack)) return false;
  for (const Rat& v : slack) {
    if (v.sign() < 0) return false;
  }
  std::array<int, 3> sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  return sorted == std::array<int, 3>{0, 1, 2} && pattern.d[0] == 1 && path_case == case_for_middle(permutation[1]);
}

Json PTreeCertificate::to_json() const {
  Json perm = Json::array();
  for (int p : permutation) perm.push_back(p + 1);
  return Json{{"pattern", pattern.str()},
              {"permutation", perm},
              {"case", std::string(1, path_case)},
              {"slack", rat_array(slack)},
              {"equality_count", equality_count}};
}

Checked<LTreeCertificate> check_ltree(const PortMatrix3& m) {
  if ((m.y12 * m.y13 * m.y23).sign() > 0) return {std::nullopt, "y12*y13*y23 > 0"};
  auto normalized = sign_normalize(m, SignTarget::AllOffDiagNonPositive);
  if (!normalized) return {std::nullopt, "no sign pattern makes the off-diagonals non-positive"};
  LTreeCertificate c = ltree_quantities(normalized->first, m);
  for (int i = 0; i < 3; ++i) {
    if (c.slack[static_cast<std::size_t>(i)].sign() < 0) {
      return {std::nullopt, "row " + std::to_string(i + 1) + " is not diagonally dominant"};
    }
  }
  if (c.zero_count < 3) return {std::nullopt, "only " + std::to_string(c.zero_count) + " of six quantities vanish"};
  return {c, {}};
}

Checked<PTreeCertificate> check_ptree(const PortMatrix3& m) {
  if ((m.y12 * m.y13 * m.y23).sign() < 0) return {std::nullopt, "y12*y13*y23 < 0"};
  int best = -1;
  for (const auto& perm : permutations3()) {
    for (const SignPattern& p : gray_patterns()) {
      PortMatrix3 a = p.apply(m).permuted(perm);
      if (a.y12.sign() < 0 || a.y13.sign() < 0 || a.y23.sign() < 0) continue;
      PTreeCertificate c;
      c.pattern = p;
      c.permutation = perm;
      c.path_case = case_for_middle(perm[1]);
      c.slack = path_conductances(a);
      c.equality_count = count_zeros(c.slack);
      bool nonneg = std::all_of(c.slack.begin(), c.slack.end(), [](const Rat& v) { return v.sign() >= 0; });
      if (nonneg) {
        if (c.equality_count >= 3) return {c, {}};
        best = std::max(best, c.equality_count);
      }
    }
  }
  if (best < 0) return {std::nullopt, "no arrangement has all six path conductances non-negative"};
  return {std::nullopt, "at most " + std::to_string(best) + " of six path inequalities are tight"};
}

MechNetwork synth_ltree(const LTreeCertificate& cert, const PortMatrix3& m) {
  if (!cert.valid()) throw Error(ErrorKind::InvalidCertificate, "L-tree certificate is not valid");
  LTreeCertificate fresh = ltree_quantities(cert.pattern, m);
  PortMatrix3 n = cert.pattern.apply(m);
  if (fresh.offdiag != cert.offdiag || fresh.slack != cert.slack || n.y12.sign() > 0 || n.y13.sign() > 0 ||
      n.y23.sign() > 0) {
    throw Error(ErrorKind::InvalidCertificate, "L-tree certificate does not match the matrix");
  }
  MechNetwork net;
  net.nodes = {0, 1, 2, 3};
  for (int i = 1; i <= 3; ++i) {
    if (cert.pattern.d[static_cast<std::size_t>(i - 1)] > 0) net.ports.push_back({i, 0});
    else net.ports.push_back({0, i});
  }
  static constexpr int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (int k = 0; k < 3; ++k) {
    const Rat& g = cert.offdiag[static_cast<std::size_t>(k)];
    if (!g.is_zero()) net.elements.push_back({ElementKind::Conductance, g, pairs[k][0], pairs[k][1], {}});
  }
  for (int i = 1; i <= 3; ++i) {
    const Rat& g = cert.slack[static_cast<std::size_t>(i - 1)];
    if (!g.is_zero()) net.elements.push_back({ElementKind::Conductance, g, i, 0, {}});
  }
  return net;
}

MechNetwork synth_ptree(const PTreeCertificate& cert, const PortMatrix3& m) {
  if (!cert.valid()) throw Error(ErrorKind::InvalidCertificate, "P-tree certificate is not valid");
  PortMatrix3 a = cert.pattern.apply(m).permuted(cert.permutation);
  if (a.y12.sign() < 0 || a.y13.sign() < 0 || a.y23.sign() < 0 || path_conductances(a) != cert.slack) {
    throw Error(ErrorKind::InvalidCertificate, "P-tree certificate does not match the matrix");
  }
  MechNetwork net;
  net.nodes = {1, 2, 3, 4};
  net.ports.resize(3);
  for (int k = 0; k < 3; ++k) {
    int port = cert.permutation[static_cast<std::size_t>(k)];
    bool forward = cert.pattern.d[static_cast<std::size_t>(port)] > 0;
    net.ports[static_cast<std::size_t>(port)] = forward ? Port{k + 1, k + 2} : Port{k + 2, k + 1};
  }
  for (int k = 0; k < 6; ++k) {
    const Rat& g = cert.slack[static_cast<std::size_t>(k)];
    if (!g.is_zero()) net.elements.push_back({ElementKind::Conductance, g, kPathPairs[k][0], kPathPairs[k][1], {}});
  }
  return net;
}

PortMatrix3 resistive_admittance(const MechNetwork& net) {
  if (net.ports.size() != 3) throw Error(ErrorKind::PortCountMismatch, "expected a three-port network");
  auto y = admittance_matrix(net);
  PortMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const RationalFunction& v = y[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v.num().degree() > 0 || v.den().degree() > 0) {
        throw Error(ErrorKind::ShapeMismatch, "admittance is not constant");
      }
      out.at(i, j) = v.num().coeff(0);
    }
  }
  return out;
}

namespace {

SynthesisResult verified_result(std::string branch, Json cert, MechNetwork net, const PortMatrix3& m) {
  PortMatrix3 got = resistive_admittance(net);
  if (got != m) {
    throw Error(ErrorKind::OracleMismatch, branch + " synthesis of " + m.str() + " realizes " + got.str());
  }
  SynthesisResult r;
  r.branch = std::move(branch);
  r.certificate = std::move(cert);
  r.netlist = std::move(net);
  r.verified = true;
  return r;
}

}  // namespace

Theorem1Outcome theorem1(const PortMatrix3& m) {
  Theorem1Outcome out;
  auto l = check_ltree(m);
  if (l) {
    out.result = verified_result("L-tree", l.certificate->to_json(), synth_ltree(*l.certificate, m), m);
    return out;
  }
  out.ltree_reason = l.reason;
  auto p = check_ptree(m);
  if (p) {
    out.result = verified_result("P-tree", p.certificate->to_json(), synth_ptree(*p.certificate, m), m);
    return out;
  }
  out.ptree_reason = p.reason;
  return out;
}

namespace {

struct Enumerator {
  int max_elements;
  int max_vertices;
  const std::function<void(const MechNetwork&)>& visit;

  void ports(std::vector<Port>& ps, int used) {
    if (ps.size() == 3) {
      for (int extra = 0; extra <= std::min(max_elements, max_vertices - used); ++extra) elements(ps, used, extra);
      return;
    }
    for (int plus = 0; plus <= used; ++plus) {
      int after_plus = used + (plus == used ? 1 : 0);
      for (int minus = 0; minus <= after_plus; ++minus) {
        if (minus == plus) continue;
        int after = after_plus + (minus == after_plus ? 1 : 0);
        if (after > max_vertices) continue;
        ps.push_back({plus, minus});
        if (forest(ps, after)) ports(ps, after);
        ps.pop_back();
      }
    }
  }

  static bool forest(const std::vector<Port>& ps, int nv) {
    std::vector<int> comp(static_cast<std::size_t>(nv));
    std::iota(comp.begin(), comp.end(), 0);
    for (const Port& p : ps) {
      int a = comp[static_cast<std::size_t>(p.plus)], b = comp[static_cast<std::size_t>(p.minus)];
      if (a == b) return false;
      for (int& c : comp) {
        if (c == b) c = a;
      }
    }
    return true;
  }

  void elements(const std::vector<Port>& ps, int pv, int extra) {
    const int nv = pv + extra;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < nv; ++a) {
      for (int b = a + 1; b < nv; ++b) pairs.push_back({a, b});
    }
    std::vector<int> extras(static_cast<std::size_t>(extra));
    std::iota(extras.begin(), extras.end(), pv);
    std::vector<std::vector<int>> relabelings;
    do {
      std::vector<int> map(static_cast<std::size_t>(nv));
      std::iota(map.begin(), map.begin() + pv, 0);
      for (int i = 0; i < extra; ++i) map[static_cast<std::size_t>(pv + i)] = extras[static_cast<std::size_t>(i)];
      relabelings.push_back(std::move(map));
    } while (std::next_permutation(extras.begin(), extras.end()));

    std::vector<std::pair<int, int>> chosen;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (accept(ps, nv, chosen, relabelings)) emit(ps, nv, chosen);
      if (static_cast<int>(chosen.size()) == max_elements) return;
      for (std::size_t i = from; i < pairs.size(); ++i) {
        chosen.push_back(pairs[i]);
        grow(i);
        chosen.pop_back();
      }
    };
    grow(0);
  }

  static bool accept(const std::vector<Port>& ps, int nv, const std::vector<std::pair<int, int>>& es,
                     const std::vector<std::vector<int>>& relabelings) {
    std::vector<int> comp(static_cast<std::size_t>(nv));
    std::iota(comp.begin(), comp.end(), 0);
    auto join = [&](int x, int y) {
      int a = comp[static_cast<std::size_t>(x)], b = comp[static_cast<std::size_t>(y)];
      for (int& c : comp) {
        if (c == b) c = a;
      }
    };
    for (const Port& p : ps) join(p.plus, p.minus);
    for (const auto& [a, b] : es) join(a, b);
    if (std::any_of(comp.begin(), comp.end(), [&](int c) { return c != comp[0]; })) return false;
    // Keep only the smallest element list over relabelings of the extra vertices.
    for (const auto& map : relabelings) {
      std::vector<std::pair<int, int>> image;
      for (const auto& [a, b] : es) {
        int x = map[static_cast<std::size_t>(a)], y = map[static_cast<std::size_t>(b)];
        image.push_back({std::min(x, y), std::max(x, y)});
      }
      std::sort(image.begin(), image.end());
      if (image < es) return false;
    }
    return true;
  }

  void emit(const std::vector<Port>& ps, int nv, const std::vector<std::pair<int, int>>& es) {
    MechNetwork net;
    net.nodes.resize(static_cast<std::size_t>(nv));
    std::iota(net.nodes.begin(), net.nodes.end(), 0);
    net.ports = ps;
    for (const auto& [a, b] : es) net.elements.push_back({ElementKind::Conductance, Rat(1), a, b, {}});
    visit(net);
  }
};

}  // namespace

void enumerate_small_networks(int max_elements, int max_vertices,
                              const std::function<void(const MechNetwork&)>& visit) {
  if (max_elements < 0 || max_elements > 3 || max_vertices > 7) {
    throw Error(ErrorKind::UsageError, "enumeration supports at most 3 elements and 7 vertices");
  }
  std::vector<Port> ps;
  Enumerator{max_elements, max_vertices, visit}.ports(ps, 0);
}

}  // namespace mechsynth
