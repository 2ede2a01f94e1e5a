#include <algorithm>
#include <numeric>
#include <random>

#include "detail.hpp"
#include "mechsynth/oneport.hpp"

namespace mechsynth {

const char* fig2_catalog_text();  // generated at configure time

namespace {

struct Role {
  const char* name;
  ElementKind kind;
};
constexpr std::array<Role, 5> kRoles = {{{"k1", ElementKind::Spring},
                                         {"k2", ElementKind::Spring},
                                         {"k3", ElementKind::Spring},
                                         {"b", ElementKind::Inerter},
                                         {"c", ElementKind::Damper}}};
constexpr int kMaxNodes = 6;

std::map<std::string, Rat> role_values(const Fig2Values& v) {
  return {{"k1", v.k1}, {"k2", v.k2}, {"k3", v.k3}, {"b", v.b}, {"c", v.c}};
}

struct Instance {
  CoefficientVector cv;
  RationalFunction y;
  Fig2Values values;
};

// Random spring three-port on the zero surface of the given case: G2..G6
// drawn, G1 solved from the defining identity (det G = 0 for (a), the
// corresponding lambda = 0 otherwise).
std::optional<Instance> draw_instance(std::mt19937_64& rng, Fig2Case which) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 3);
  auto draw = [&] { return Rat(mpz_class(num(rng)), mpz_class(den(rng))); };
  PortMatrix3 g;
  g.y22 = draw();
  g.y33 = draw();
  g.y12 = draw();
  g.y13 = draw();
  g.y23 = draw();
  if (which == Fig2Case::A) g.y23 = -g.y23;
  const Rat &g2 = g.y22, &g3 = g.y33, &g4 = g.y12, &g5 = g.y13, &g6 = g.y23;
  Rat m23 = g2 * g3 - g6 * g6;
  Rat top;
  Rat bottom = m23;
  switch (which) {
    case Fig2Case::A: top = g4 * (g4 * g3 - g5 * g6) - g5 * (g4 * g6 - g2 * g5); break;
    case Fig2Case::B: top = g3 * g4 * g4 - g4 * g5 * g6; break;
    case Fig2Case::C: top = g2 * g5 * g5 - g4 * g5 * g6; break;
    case Fig2Case::D:
      top = g3 * g4 * g4 + g2 * g5 * g5 - g4 * g5 * g6;
      bottom = g2 * g3;
      break;
  }
  if (bottom.sign() <= 0) return std::nullopt;
  g.y11 = top / bottom;
  if (g.y11.sign() <= 0 || !nonneg_definite_via_coeffs(g).first) return std::nullopt;
  Instance inst;
  inst.cv = coeffs_from_G(g);
  Theorem5Result t = classify_theorem5(inst.cv);
  if (t.kind != Theorem5Result::Kind::Cond2 || *t.fig2_case != which) return std::nullopt;
  inst.values = fig2_values(inst.cv, which);
  for (const Rat* v : {&inst.values.k1, &inst.values.k2, &inst.values.k3, &inst.values.b, &inst.values.c}) {
    if (v->sign() <= 0) return std::nullopt;
  }
  inst.y = inst.cv.function();
  return inst;
}

std::vector<Instance> instances(Fig2Case which, int count) {
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(which));
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count) {
    if (auto inst = draw_instance(rng, which)) out.push_back(std::move(*inst));
  }
  return out;
}

MechNetwork with_values(const MechNetwork& topology, const Fig2Values& v) {
  return detail::assign_roles(topology, role_values(v));
}

MechNetwork build_topology(int n, const std::array<std::pair<int, int>, 5>& pairs) {
  MechNetwork net;
  for (int v = 0; v < n; ++v) net.nodes.push_back(v);
  net.ports = {{1, 0}};
  for (std::size_t r = 0; r < kRoles.size(); ++r) {
    net.elements.push_back({kRoles[r].kind, Rat(1), pairs[r].first, pairs[r].second, kRoles[r].name});
  }
  return net;
}

bool connected(int n, const std::array<std::pair<int, int>, 5>& pairs) {
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int v) {
    while (comp[static_cast<std::size_t>(v)] != v) v = comp[static_cast<std::size_t>(v)];
    return v;
  };
  auto unite = [&](int a, int b) { comp[static_cast<std::size_t>(find(a))] = find(b); };
  unite(0, 1);
  for (auto [a, b] : pairs) unite(a, b);
  for (int v = 0; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

// True when no relabelling of the internal nodes (2..n-1), optionally with the
// port reversed, gives a lexicographically smaller role-indexed edge list.
bool canonical(int n, const std::array<std::pair<int, int>, 5>& pairs) {
  auto code = [](std::pair<int, int> p) { return std::min(p.first, p.second) * 8 + std::max(p.first, p.second); };
  std::array<int, 5> base;
  for (std::size_t r = 0; r < 5; ++r) base[r] = code(pairs[r]);
  for (bool reversed : {false, true}) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    if (reversed) std::swap(perm[0], perm[1]);
    do {
      std::array<int, 5> mapped;
      for (std::size_t r = 0; r < 5; ++r) {
        mapped[r] =
            code({perm[static_cast<std::size_t>(pairs[r].first)], perm[static_cast<std::size_t>(pairs[r].second)]});
      }
      if (mapped < base) return false;
    } while (std::next_permutation(perm.begin() + 2, perm.end()));
  }
  return true;
}

}  // namespace

const Fig2Catalog& builtin_fig2_catalog() {
  static const Fig2Catalog catalog = [] {
    std::string text = fig2_catalog_text();
    return text.empty() ? Fig2Catalog{} : parse_fig2_catalog(text);
  }();
  return catalog;
}

Fig2Catalog parse_fig2_catalog(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("catalog: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "catalog must be a JSON object");
  Fig2Catalog out;
  for (const auto& [key, value] : j.items()) {
    auto c = key.size() == 1 ? parse_fig2_case(key[0]) : std::nullopt;
    if (!c) throw Error(ErrorKind::ParseError, "unknown catalog case '" + key + "'");
    out[*c] = netlist_from_json(value);
  }
  return out;
}

std::string format_fig2_catalog(const Fig2Catalog& catalog) {
  std::string out = "{\n";
  bool first = true;
  for (const auto& [c, net] : catalog) {
    out += std::string(first ? "" : ",\n") + "  \"" + to_char(c) + "\": " + netlist_to_json(net).dump();
    first = false;
  }
  return out + "\n}\n";
}

Fig2Catalog Fig2Recovery::catalog() const {
  Fig2Catalog out;
  for (const auto& [c, nets] : matches) {
    if (!nets.empty()) out[c] = nets.front();
  }
  return out;
}

Fig2Recovery recover_fig2_topologies() {
  constexpr std::array<Fig2Case, 4> kCases = {Fig2Case::A, Fig2Case::B, Fig2Case::C, Fig2Case::D};
  std::map<Fig2Case, std::vector<Instance>> inst;
  for (Fig2Case c : kCases) inst[c] = instances(c, 3);
  const Rat s2(2), s3(3), s5(5);

  Fig2Recovery out;
  for (Fig2Case c : kCases) out.matches[c];
  for (int n = 2; n <= kMaxNodes; ++n) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) all.push_back({a, b});
    }
    const std::size_t np = all.size();
    std::array<std::size_t, 5> idx{};
    while (true) {
      std::array<std::pair<int, int>, 5> pairs;
      std::vector<int> degree(static_cast<std::size_t>(n), 0);
      for (std::size_t r = 0; r < 5; ++r) {
        pairs[r] = all[idx[r]];
        ++degree[static_cast<std::size_t>(pairs[r].first)];
        ++degree[static_cast<std::size_t>(pairs[r].second)];
      }
      // Internal nodes of degree < 2 are unused or dangling.
      bool useful = std::all_of(degree.begin() + 2, degree.end(), [](int d) { return d >= 2; });
      if (useful && connected(n, pairs) && canonical(n, pairs)) {
        ++out.candidates;
        MechNetwork topo = build_topology(n, pairs);
        for (Fig2Case c : kCases) {
          const auto& list = inst[c];
          bool match = true;
          for (const Rat& s : {s2, s3, s5}) {
            if (admittance_at(with_values(topo, list[0].values), s)[0][0] != list[0].y.eval(s)) {
              match = false;
              break;
            }
          }
          for (std::size_t i = 0; match && i < list.size(); ++i) {
            match = driving_point(with_values(topo, list[i].values)) == list[i].y;
          }
          if (match) out.matches[c].push_back(topo);
        }
      }
      std::size_t r = 0;
      while (r < 5 && ++idx[r] == np) idx[r++] = 0;
      if (r == 5) break;
    }
  }
  return out;
}

MechNetwork synth_fig2(const CoefficientVector& cv, Fig2Case which, const Fig2Catalog& catalog) {
  Fig2Values v = fig2_values(cv, which);
  auto it = catalog.find(which);
  if (it == catalog.end()) {
    throw Error(ErrorKind::TopologyUnavailable, std::string("no catalog topology for case (") + to_char(which) + ")");
  }
  MechNetwork net = with_values(it->second, v);
  if (driving_point(net) != cv.function()) {
    throw Error(ErrorKind::OracleMismatch, "case (" + std::string(1, to_char(which)) + ") network for " + cv.str() +
                                               " has admittance " + driving_point(net).str());
  }
  return net;
}

}  // namespace mechsynth
