#pragma once

// Reference computations used only by tests. None of these share code with
// the library's loop-analysis oracle.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mechsynth/network.hpp"
#include "support/random.hpp"

namespace mechsynth::testing {

template <class F>
RatFunc<F> element_admittance(const BasicElement<F>& e) {
  using P = Polynomial<F>;
  switch (e.kind) {
    case ElementKind::Spring: return RatFunc<F>(P(e.value), P::s());
    case ElementKind::Inerter: return RatFunc<F>(P::monomial(e.value, 1));
    default: return RatFunc<F>(e.value);
  }
}

// Gauss elimination over any field; nullopt when singular.
template <class T>
std::optional<std::vector<std::vector<T>>> solve(std::vector<std::vector<T>> a, std::size_t n_rhs) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[k], a[piv]);
    T inv = T(1) / a[k][k];
    for (std::size_t j = 0; j < n + n_rhs; ++j) a[k][j] = a[k][j] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      T f = a[i][k];
      for (std::size_t j = 0; j < n + n_rhs; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  std::vector<std::vector<T>> x(n, std::vector<T>(n_rhs));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n_rhs; ++j) x[i][j] = a[i][n + j];
  }
  return x;
}

// Modified nodal analysis. Unknowns: potentials of every node but the first,
// then port currents. Port rows impose u_plus - u_minus = v. Returns nullopt
// when the system is singular.
template <class F>
std::optional<RfMatrix<F>> nodal_admittance(const BasicNetwork<F>& net) {
  using RF = RatFunc<F>;
  std::map<int, std::size_t> idx;
  for (int v : net.nodes) idx.emplace(v, idx.size());
  const std::size_t nv = idx.size() - 1, np = net.ports.size(), n = nv + np;
  auto col = [&](int node) -> std::optional<std::size_t> {
    std::size_t i = idx.at(node);
    if (i == 0) return std::nullopt;
    return i - 1;
  };
  std::vector<std::vector<RF>> a(n, std::vector<RF>(n + np));
  for (const auto& e : net.elements) {
    RF y = element_admittance(e);
    auto ca = col(e.a), cb = col(e.b);
    if (ca) a[*ca][*ca] += y;
    if (cb) a[*cb][*cb] += y;
    if (ca && cb) {
      a[*ca][*cb] -= y;
      a[*cb][*ca] -= y;
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    auto cp = col(net.ports[p].plus), cm = col(net.ports[p].minus);
    // Port current enters the network at plus.
    if (cp) a[*cp][nv + p] -= RF(1);
    if (cm) a[*cm][nv + p] += RF(1);
    if (cp) a[nv + p][*cp] += RF(1);
    if (cm) a[nv + p][*cm] -= RF(1);
    a[nv + p][n + p] = RF(1);
  }
  auto x = solve(std::move(a), np);
  if (!x) return std::nullopt;
  RfMatrix<F> y(np, std::vector<RF>(np));
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < np; ++j) y[i][j] = (*x)[nv + i][j];
  }
  return y;
}

// Loop analysis with a tree grown from element edges first, so ports may be
// chords. Returns whether B R B^T (element columns only, at s = 1) is
// nonsingular.
inline bool loop_matrix_nonsingular(const MechNetwork& net) {
  std::map<int, std::size_t> idx;
  for (int v : net.nodes) idx.emplace(v, idx.size());
  struct E { std::size_t u, v; bool port; std::size_t k; };
  std::vector<E> edges;
  for (std::size_t k = 0; k < net.elements.size(); ++k) {
    edges.push_back({idx.at(net.elements[k].a), idx.at(net.elements[k].b), false, k});
  }
  for (std::size_t p = 0; p < net.ports.size(); ++p) {
    edges.push_back({idx.at(net.ports[p].plus), idx.at(net.ports[p].minus), true, p});
  }
  const std::size_t nv = idx.size();
  std::vector<int> comp(nv);
  for (std::size_t i = 0; i < nv; ++i) comp[i] = static_cast<int>(i);
  auto relabel = [&](int from, int to) {
    for (int& c : comp) if (c == from) c = to;
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
  std::vector<std::size_t> chords;
  for (std::size_t id = 0; id < edges.size(); ++id) {
    if (comp[edges[id].u] != comp[edges[id].v]) {
      relabel(comp[edges[id].v], comp[edges[id].u]);
      adj[edges[id].u].push_back({edges[id].v, id});
      adj[edges[id].v].push_back({edges[id].u, id});
    } else {
      chords.push_back(id);
    }
  }
  std::vector<std::vector<Rat>> b;
  for (std::size_t c : chords) {
    std::vector<Rat> row(net.elements.size(), Rat(0));
    if (!edges[c].port) row[edges[c].k] = 1;
    // BFS from v to u inside the tree.
    std::vector<std::pair<long, std::size_t>> par(nv, {-1, 0});
    std::vector<std::size_t> queue{edges[c].v};
    par[edges[c].v] = {static_cast<long>(edges[c].v), 0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (auto [w, id] : adj[queue[qi]]) {
        if (par[w].first >= 0) continue;
        par[w] = {static_cast<long>(queue[qi]), id};
        queue.push_back(w);
      }
    }
    for (std::size_t w = edges[c].u; w != edges[c].v;) {
      auto [pu, id] = par[w];
      std::size_t from = static_cast<std::size_t>(pu);
      int sign = (edges[id].u == from && edges[id].v == w) ? 1 : -1;
      if (!edges[id].port) row[edges[id].k] = sign;
      w = from;
    }
    b.push_back(std::move(row));
  }
  const std::size_t l = b.size();
  std::vector<std::vector<Rat>> z(l, std::vector<Rat>(l, Rat(0)));
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t c = 0; c < l; ++c) {
      for (std::size_t k = 0; k < net.elements.size(); ++k) {
        if (b[r][k].is_zero() || b[c][k].is_zero()) continue;
        z[r][c] += b[r][k] * b[c][k] / net.elements[k].value;  // impedance at s = 1
      }
    }
  }
  return solve(std::move(z), 0).has_value();
}

// Series-parallel one-port expressions.
struct SpNode {
  enum Kind { Leaf, Series, Parallel } kind = Leaf;
  ElementKind element = ElementKind::Spring;
  Rat value;
  std::shared_ptr<SpNode> left, right;
};
using SpTree = std::shared_ptr<SpNode>;

inline SpTree sp_leaf(ElementKind k, Rat v) {
  auto n = std::make_shared<SpNode>();
  n->element = k;
  n->value = std::move(v);
  return n;
}
inline SpTree sp_join(SpNode::Kind kind, SpTree a, SpTree b) {
  auto n = std::make_shared<SpNode>();
  n->kind = kind;
  n->left = std::move(a);
  n->right = std::move(b);
  return n;
}

// Admittance by series/parallel composition.
inline RationalFunction sp_admittance(const SpTree& t) {
  switch (t->kind) {
    case SpNode::Leaf: return element_admittance(Element{t->element, t->value, 0, 1, {}});
    case SpNode::Parallel: return sp_admittance(t->left) + sp_admittance(t->right);
    case SpNode::Series: return (sp_admittance(t->left).inverse() + sp_admittance(t->right).inverse()).inverse();
  }
  return {};
}

inline void sp_place(const SpTree& t, int a, int b, int& next, MechNetwork& net) {
  switch (t->kind) {
    case SpNode::Leaf: net.elements.push_back({t->element, t->value, a, b, {}}); return;
    case SpNode::Parallel:
      sp_place(t->left, a, b, next, net);
      sp_place(t->right, a, b, next, net);
      return;
    case SpNode::Series: {
      int mid = next++;
      net.nodes.push_back(mid);
      sp_place(t->left, a, mid, next, net);
      sp_place(t->right, mid, b, next, net);
      return;
    }
  }
}

// One-port network with the port across nodes 1 (plus) and 0.
inline MechNetwork sp_network(const SpTree& t) {
  MechNetwork net;
  net.nodes = {0, 1};
  net.ports = {{1, 0}};
  int next = 2;
  sp_place(t, 1, 0, next, net);
  return net;
}

inline ElementKind random_kind(Gen& g, bool conductances_only = false) {
  if (conductances_only) return ElementKind::Conductance;
  static constexpr ElementKind kinds[] = {ElementKind::Spring, ElementKind::Damper, ElementKind::Inerter};
  return kinds[g.integer(0, 2)];
}

inline SpTree random_sp(Gen& g, int leaves) {
  if (leaves == 1) return sp_leaf(random_kind(g), g.positive());
  int left = g.integer(1, leaves - 1);
  return sp_join(g.coin() ? SpNode::Series : SpNode::Parallel, random_sp(g, left), random_sp(g, leaves - left));
}

// Ladder built one element at a time: each step puts a new element in series
// or in parallel with everything built so far. `kinds` fixes the multiset.
inline SpTree random_ladder(Gen& g, std::vector<ElementKind> kinds) {
  std::shuffle(kinds.begin(), kinds.end(), g.engine());
  SpTree t = sp_leaf(kinds[0], g.positive());
  for (std::size_t i = 1; i < kinds.size(); ++i) {
    t = sp_join(g.coin() ? SpNode::Series : SpNode::Parallel, t, sp_leaf(kinds[i], g.positive()));
  }
  return t;
}

// Random connected augmented graph: nodes 0..nv-1, ports among them, a random
// spanning structure from mixed edges, then extra random edges.
inline MechNetwork random_network(Gen& g, int max_vertices, int max_elements, int max_ports,
                                  bool conductances_only = false) {
  while (true) {
    int nv = g.integer(2, max_vertices);
    MechNetwork net;
    for (int v = 0; v < nv; ++v) net.nodes.push_back(v);
    int ne = g.integer(0, max_elements), np = g.integer(1, max_ports);
    auto pair = [&] {
      int a = g.integer(0, nv - 1), b = g.integer(0, nv - 2);
      if (b >= a) ++b;
      return std::pair{a, b};
    };
    for (int p = 0; p < np; ++p) {
      auto [a, b] = pair();
      net.ports.push_back({a, b});
    }
    for (int k = 0; k < ne; ++k) {
      auto [a, b] = pair();
      net.elements.push_back({random_kind(g, conductances_only), g.positive(), a, b, {}});
    }
    try {
      validate(net);
      return net;
    } catch (const Error&) {
      continue;  // disconnected draw
    }
  }
}

}  // namespace mechsynth::testing
