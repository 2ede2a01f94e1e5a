#include "detail.hpp"

#include <algorithm>
#include <set>

namespace mechsynth::detail {

template <class F>
BasicNetwork<F> assign_roles(const MechNetwork& topology, const std::map<std::string, F>& values) {
  BasicNetwork<F> out;
  out.ports = topology.ports;
  for (const auto& e : topology.elements) {
    auto it = values.find(e.role);
    if (it == values.end()) throw Error(ErrorKind::InternalInvariant, "no value for role '" + e.role + "'");
    if (it->second.is_zero() && e.kind == ElementKind::Spring) continue;
    out.elements.push_back({e.kind, it->second, e.a, e.b, e.role});
  }
  // Keep the nodes reachable from a port terminal.
  std::set<int> reach;
  std::vector<int> stack;
  for (const Port& p : out.ports) {
    for (int v : {p.plus, p.minus}) {
      if (reach.insert(v).second) stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto visit = [&](int w) {
      if (reach.insert(w).second) stack.push_back(w);
    };
    for (const auto& e : out.elements) {
      if (e.a == v) visit(e.b);
      if (e.b == v) visit(e.a);
    }
    for (const Port& p : out.ports) {
      if (p.plus == v) visit(p.minus);
      if (p.minus == v) visit(p.plus);
    }
  }
  for (int v : topology.nodes) {
    if (reach.count(v)) out.nodes.push_back(v);
  }
  std::erase_if(out.elements, [&](const auto& e) { return !reach.count(e.a); });
  return out;
}

template SurdNetwork assign_roles(const MechNetwork&, const std::map<std::string, Surd>&);
template MechNetwork assign_roles(const MechNetwork&, const std::map<std::string, Rat>&);

}  // namespace mechsynth::detail
