#include "mechsynth/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mechsynth {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Spring: return "spring";
    case ElementKind::Damper: return "damper";
    case ElementKind::Inerter: return "inerter";
    case ElementKind::Conductance: return "conductance";
  }
  return "?";
}

ElementKind parse_element_kind(std::string_view text) {
  if (text == "spring") return ElementKind::Spring;
  if (text == "damper") return ElementKind::Damper;
  if (text == "inerter") return ElementKind::Inerter;
  if (text == "conductance") return ElementKind::Conductance;
  throw Error(ErrorKind::ParseError, "unknown element kind '" + std::string(text) + "'");
}

std::string_view to_string(PortGraphShape shape) {
  switch (shape) {
    case PortGraphShape::LTree: return "L-tree";
    case PortGraphShape::PTree: return "P-tree";
    case PortGraphShape::Neither: return "neither";
  }
  return "?";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

template <class F>
std::map<int, std::size_t> node_index(const BasicNetwork<F>& net) {
  std::map<int, std::size_t> idx;
  for (int v : net.nodes) {
    if (!idx.emplace(v, idx.size()).second) {
      throw Error(ErrorKind::InvalidNetwork, "duplicate node id " + std::to_string(v));
    }
  }
  return idx;
}

std::size_t lookup(const std::map<int, std::size_t>& idx, int v) {
  auto it = idx.find(v);
  if (it == idx.end()) throw Error(ErrorKind::InvalidNetwork, "node " + std::to_string(v) + " is not declared");
  return it->second;
}

// Edge list of the augmented graph: ports first, then elements.
struct Edge {
  std::size_t from, to;
};

template <class F>
std::vector<Edge> augmented_edges(const BasicNetwork<F>& net, const std::map<int, std::size_t>& idx) {
  std::vector<Edge> edges;
  for (const Port& p : net.ports) edges.push_back({lookup(idx, p.plus), lookup(idx, p.minus)});
  for (const auto& e : net.elements) edges.push_back({lookup(idx, e.a), lookup(idx, e.b)});
  return edges;
}

}  // namespace

template <class F>
RatFunc<F> element_impedance(const BasicElement<F>& e) {
  if (e.value.sign() <= 0) {
    throw Error(ErrorKind::NonpositiveValue, std::string(to_string(e.kind)) + " value " + e.value.str());
  }
  using P = Polynomial<F>;
  switch (e.kind) {
    case ElementKind::Spring: return RatFunc<F>(P::monomial(F(1) / e.value, 1));
    case ElementKind::Inerter: return RatFunc<F>(P(F(1)), P::monomial(e.value, 1));
    case ElementKind::Damper:
    case ElementKind::Conductance: return RatFunc<F>(F(1) / e.value);
  }
  throw Error(ErrorKind::InternalInvariant, "unknown element kind");
}

template <class F>
void validate(const BasicNetwork<F>& net) {
  auto idx = node_index(net);
  for (const Port& p : net.ports) {
    if (p.plus == p.minus) throw Error(ErrorKind::InvalidNetwork, "port terminals coincide");
  }
  for (const auto& e : net.elements) {
    if (e.a == e.b) throw Error(ErrorKind::InvalidNetwork, "element endpoints coincide");
    if (e.value.sign() <= 0) {
      throw Error(ErrorKind::NonpositiveValue, std::string(to_string(e.kind)) + " value " + e.value.str());
    }
  }
  UnionFind uf(idx.size());
  std::size_t components = idx.size();
  for (const Edge& e : augmented_edges(net, idx)) {
    if (uf.unite(e.from, e.to)) --components;
  }
  if (components > 1) throw Error(ErrorKind::DisconnectedGraph, "augmented graph is not connected");
}

template <class F>
bool port_graph_extends_to_tree(const BasicNetwork<F>& net) {
  validate(net);
  auto idx = node_index(net);
  UnionFind uf(idx.size());
  for (const Port& p : net.ports) {
    if (!uf.unite(lookup(idx, p.plus), lookup(idx, p.minus))) return false;
  }
  return true;
}

template <class F>
CircuitStructure circuit_structure(const BasicNetwork<F>& net, const std::vector<int>& order) {
  validate(net);
  auto idx = node_index(net);
  const std::size_t n_ports = net.ports.size();
  const std::size_t n_elem = net.elements.size();
  std::vector<Edge> edges = augmented_edges(net, idx);

  std::vector<int> seq = order;
  if (seq.empty()) {
    seq.resize(n_elem);
    std::iota(seq.begin(), seq.end(), 0);
  }
  if (seq.size() != n_elem) throw Error(ErrorKind::InvalidNetwork, "tree order must list every element once");

  UnionFind uf(idx.size());
  // Tree adjacency: node -> (neighbor, edge id).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(idx.size());
  auto add_tree_edge = [&](std::size_t id) {
    adj[edges[id].from].push_back({edges[id].to, id});
    adj[edges[id].to].push_back({edges[id].from, id});
  };
  for (std::size_t p = 0; p < n_ports; ++p) {
    if (!uf.unite(edges[p].from, edges[p].to)) {
      throw Error(ErrorKind::NotWellDefined, "port edges contain a circuit");
    }
    add_tree_edge(p);
  }
  CircuitStructure cs;
  std::vector<bool> in_tree(n_elem, false);
  for (int k : seq) {
    std::size_t id = n_ports + static_cast<std::size_t>(k);
    if (uf.unite(edges[id].from, edges[id].to)) {
      in_tree[static_cast<std::size_t>(k)] = true;
      cs.tree_elements.push_back(k);
      add_tree_edge(id);
    }
  }
  std::sort(cs.tree_elements.begin(), cs.tree_elements.end());

  for (std::size_t k = 0; k < n_elem; ++k) {
    if (in_tree[k]) continue;
    const Edge& chord = edges[n_ports + k];
    // Tree path from the chord's head back to its tail.
    std::vector<std::pair<std::size_t, std::size_t>> parent(idx.size(), {SIZE_MAX, SIZE_MAX});
    std::vector<std::size_t> stack{chord.to};
    parent[chord.to] = {chord.to, SIZE_MAX};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (auto [v, id] : adj[u]) {
        if (parent[v].first != SIZE_MAX) continue;
        parent[v] = {u, id};
        stack.push_back(v);
      }
    }
    std::vector<int> brow(n_elem, 0), frow(n_ports, 0);
    brow[k] = 1;
    // Walk back from the tail to the head, then read the path forward.
    for (std::size_t v = chord.from; v != chord.to;) {
      auto [u, id] = parent[v];
      if (u == SIZE_MAX) throw Error(ErrorKind::InternalInvariant, "chord endpoints not joined by tree");
      // The loop traverses u -> v.
      int sign = (edges[id].from == u && edges[id].to == v) ? 1 : -1;
      if (id < n_ports) frow[id] = sign;
      else brow[id - n_ports] = sign;
      v = u;
    }
    cs.B.push_back(std::move(brow));
    cs.F.push_back(std::move(frow));
    cs.chords.push_back(static_cast<int>(k));
  }
  return cs;
}

namespace {

// Solves Z X = rhs over the field of constants F by Gauss-Jordan elimination.
template <class F>
std::vector<std::vector<F>> solve_constant(std::vector<std::vector<F>> a, std::size_t n_rhs) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorKind::InternalInvariant, "loop impedance matrix is singular");
    std::swap(a[k], a[piv]);
    F inv = F(1) / a[k][k];
    for (std::size_t j = k; j < n + n_rhs; ++j) a[k][j] = a[k][j] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      F f = a[i][k];
      for (std::size_t j = k; j < n + n_rhs; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<std::vector<F>> x(n, std::vector<F>(n_rhs));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n_rhs; ++j) x[i][j] = a[i][n + j];
  }
  return x;
}

// Fraction-free Gauss-Jordan (Bareiss) on [Z | rhs] over polynomials.
// On return the left block is det * I and the right block is det * Z^{-1} rhs.
template <class F>
Polynomial<F> bareiss_gauss_jordan(std::vector<std::vector<Polynomial<F>>>& a, std::size_t n_rhs) {
  using P = Polynomial<F>;
  const std::size_t n = a.size();
  P prev(F(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorKind::InternalInvariant, "loop impedance matrix is singular");
    std::swap(a[k], a[piv]);
    const P p = a[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const P f = a[i][k];
      for (std::size_t j = 0; j < n + n_rhs; ++j) {
        if (j == k) continue;
        a[i][j] = exact_div(p * a[i][j] - f * a[k][j], prev);
      }
      a[i][k] = P();
    }
    prev = p;
  }
  return prev;
}

}  // namespace

template <class F>
RfMatrix<F> admittance_matrix(const BasicNetwork<F>& net, const std::vector<int>& order) {
  CircuitStructure cs = circuit_structure(net, order);
  const std::size_t n_ports = net.ports.size();
  const std::size_t l = cs.B.size();
  RfMatrix<F> y(n_ports, std::vector<RatFunc<F>>(n_ports));
  if (l == 0) return y;

  // Elements taking part in some loop.
  std::vector<std::size_t> used;
  for (std::size_t k = 0; k < net.elements.size(); ++k) {
    for (std::size_t r = 0; r < l; ++r) {
      if (cs.B[r][k] != 0) {
        used.push_back(k);
        break;
      }
    }
  }
  bool constant = true, has_inerter = false;
  for (std::size_t k : used) {
    element_impedance(net.elements[k]);  // positivity check
    ElementKind kind = net.elements[k].kind;
    if (kind == ElementKind::Spring || kind == ElementKind::Inerter) constant = false;
    if (kind == ElementKind::Inerter) has_inerter = true;
  }

  auto fcol = [&](std::size_t r, std::size_t j) { return F(cs.F[r][j]); };

  if (constant) {
    std::vector<std::vector<F>> a(l, std::vector<F>(l + n_ports, F(0)));
    for (std::size_t r = 0; r < l; ++r) {
      for (std::size_t c = 0; c < l; ++c) {
        for (std::size_t k : used) {
          int br = cs.B[r][k], bc = cs.B[c][k];
          if (br && bc) a[r][c] += F(br * bc) / net.elements[k].value;
        }
      }
      for (std::size_t j = 0; j < n_ports; ++j) a[r][l + j] = fcol(r, j);
    }
    auto x = solve_constant(std::move(a), n_ports);
    for (std::size_t i = 0; i < n_ports; ++i) {
      for (std::size_t j = 0; j < n_ports; ++j) {
        F acc(0);
        for (std::size_t r = 0; r < l; ++r) {
          if (cs.F[r][i]) acc += fcol(r, i) * x[r][j];
        }
        y[i][j] = RatFunc<F>(acc);
      }
    }
    return y;
  }

  // m * R is polynomial, with m = s when inerters are present.
  using P = Polynomial<F>;
  std::vector<P> mr(net.elements.size());
  for (std::size_t k : used) {
    const auto& e = net.elements[k];
    F inv = F(1) / e.value;
    switch (e.kind) {
      case ElementKind::Spring: mr[k] = P::monomial(inv, has_inerter ? 2 : 1); break;
      case ElementKind::Inerter: mr[k] = P(inv); break;
      case ElementKind::Damper:
      case ElementKind::Conductance: mr[k] = has_inerter ? P::monomial(inv, 1) : P(inv); break;
    }
  }
  std::vector<std::vector<P>> a(l, std::vector<P>(l + n_ports));
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t c = 0; c < l; ++c) {
      P acc;
      for (std::size_t k : used) {
        int br = cs.B[r][k], bc = cs.B[c][k];
        if (br && bc) acc += br * bc > 0 ? mr[k] : -mr[k];
      }
      a[r][c] = acc;
    }
    for (std::size_t j = 0; j < n_ports; ++j) a[r][l + j] = P(fcol(r, j));
  }
  P det = bareiss_gauss_jordan(a, n_ports);
  for (std::size_t r = 0; r < l; ++r) {
    if (!(a[r][r] == det)) throw Error(ErrorKind::InternalInvariant, "fraction-free elimination lost the determinant");
  }
  P m = has_inerter ? P::s() : P(F(1));
  for (std::size_t i = 0; i < n_ports; ++i) {
    for (std::size_t j = i; j < n_ports; ++j) {
      P acc;
      for (std::size_t r = 0; r < l; ++r) {
        if (cs.F[r][i]) acc += a[r][l + j].scaled(fcol(r, i));
      }
      y[i][j] = RatFunc<F>(m * acc, det);
      y[j][i] = y[i][j];
    }
  }
  return y;
}

template <class F>
RatFunc<F> driving_point(const BasicNetwork<F>& net) {
  if (net.ports.size() != 1) {
    throw Error(ErrorKind::PortCountMismatch, "expected one port, got " + std::to_string(net.ports.size()));
  }
  return admittance_matrix(net)[0][0];
}

std::vector<std::vector<Rat>> admittance_at(const MechNetwork& net, const Rat& s0) {
  CircuitStructure cs = circuit_structure(net);
  const std::size_t n_ports = net.ports.size();
  const std::size_t l = cs.B.size();
  std::vector<std::vector<Rat>> y(n_ports, std::vector<Rat>(n_ports, Rat(0)));
  if (l == 0) return y;
  std::vector<Rat> z(net.elements.size());
  for (std::size_t k = 0; k < net.elements.size(); ++k) z[k] = element_impedance(net.elements[k]).eval(s0);
  std::vector<std::vector<Rat>> a(l, std::vector<Rat>(l + n_ports, Rat(0)));
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t c = r; c < l; ++c) {
      Rat acc;
      for (std::size_t k = 0; k < z.size(); ++k) {
        int br = cs.B[r][k], bc = cs.B[c][k];
        if (br && bc) acc += br * bc > 0 ? z[k] : -z[k];
      }
      a[r][c] = a[c][r] = acc;
    }
    for (std::size_t j = 0; j < n_ports; ++j) a[r][l + j] = Rat(cs.F[r][j]);
  }
  auto x = solve_constant(std::move(a), n_ports);
  for (std::size_t i = 0; i < n_ports; ++i) {
    for (std::size_t j = 0; j < n_ports; ++j) {
      Rat acc;
      for (std::size_t r = 0; r < l; ++r) {
        if (cs.F[r][i]) acc += Rat(cs.F[r][i]) * x[r][j];
      }
      y[i][j] = acc;
    }
  }
  return y;
}

PortGraphShape classify_port_graph(const MechNetwork& net) {
  std::map<int, int> degree;
  std::map<int, std::size_t> idx;
  for (const Port& p : net.ports) {
    ++degree[p.plus];
    ++degree[p.minus];
    idx.emplace(p.plus, idx.size());
    idx.emplace(p.minus, idx.size());
  }
  UnionFind uf(idx.size());
  for (const Port& p : net.ports) {
    if (!uf.unite(idx[p.plus], idx[p.minus])) throw Error(ErrorKind::PortCircuit, "port edges contain a cycle");
  }
  if (net.ports.empty()) return PortGraphShape::Neither;
  for (const auto& [v, d] : degree) {
    if (static_cast<std::size_t>(d) == net.ports.size()) return PortGraphShape::LTree;
  }
  // A forest with one component and maximum degree 2 is a path.
  bool connected = idx.size() == net.ports.size() + 1;
  bool low_degree = std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second <= 2; });
  return connected && low_degree ? PortGraphShape::PTree : PortGraphShape::Neither;
}

template <class F>
Census census(const BasicNetwork<F>& net) {
  Census c;
  for (const auto& e : net.elements) {
    switch (e.kind) {
      case ElementKind::Spring: ++c.springs; break;
      case ElementKind::Damper: ++c.dampers; break;
      case ElementKind::Inerter: ++c.inerters; break;
      case ElementKind::Conductance: ++c.conductances; break;
    }
  }
  return c;
}

SurdNetwork to_surd(const MechNetwork& net) {
  SurdNetwork out;
  out.nodes = net.nodes;
  out.ports = net.ports;
  for (const Element& e : net.elements) out.elements.push_back({e.kind, Surd(e.value), e.a, e.b, e.role});
  return out;
}

#define MECHSYNTH_INSTANTIATE(F)                                                                   \
  template RatFunc<F> element_impedance(const BasicElement<F>&);                                   \
  template void validate(const BasicNetwork<F>&);                                                  \
  template bool port_graph_extends_to_tree(const BasicNetwork<F>&);                                \
  template CircuitStructure circuit_structure(const BasicNetwork<F>&, const std::vector<int>&);    \
  template RfMatrix<F> admittance_matrix(const BasicNetwork<F>&, const std::vector<int>&);         \
  template RatFunc<F> driving_point(const BasicNetwork<F>&);                                       \
  template Census census(const BasicNetwork<F>&);

MECHSYNTH_INSTANTIATE(Rat)
MECHSYNTH_INSTANTIATE(Surd)

#undef MECHSYNTH_INSTANTIATE

}  // namespace mechsynth
