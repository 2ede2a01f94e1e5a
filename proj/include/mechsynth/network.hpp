#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mechsynth/ratfunc.hpp"
#include "mechsynth/surd.hpp"

namespace mechsynth {

enum class ElementKind { Spring, Damper, Inerter, Conductance };

std::string_view to_string(ElementKind kind);
ElementKind parse_element_kind(std::string_view text);

/// Two-terminal element oriented a -> b. `role` is an optional label
/// ("k1", "b", ...) carried through netlists; it never affects analysis.
template <class F>
struct BasicElement {
  ElementKind kind = ElementKind::Conductance;
  F value;
  int a = 0;
  int b = 0;
  std::string role;

  friend bool operator==(const BasicElement&, const BasicElement&) = default;
};

/// Port i (1-based by position) drives current in at `plus` and out at `minus`.
struct Port {
  int plus = 0;
  int minus = 0;

  friend bool operator==(const Port&, const Port&) = default;
};

template <class F>
struct BasicNetwork {
  std::vector<int> nodes;
  std::vector<BasicElement<F>> elements;
  std::vector<Port> ports;

  friend bool operator==(const BasicNetwork&, const BasicNetwork&) = default;
};

using Element = BasicElement<Rat>;
using MechNetwork = BasicNetwork<Rat>;
using SurdNetwork = BasicNetwork<Surd>;

template <class F>
using RfMatrix = std::vector<std::vector<RatFunc<F>>>;
using AdmittanceMatrix = RfMatrix<Rat>;

/// Fundamental circuit matrix of the augmented graph. Edges are the ports
/// (always in the tree) followed by the elements; each row is the circuit of
/// one chord, oriented along the chord.
struct CircuitStructure {
  std::vector<std::vector<int>> B;  // rows x elements
  std::vector<std::vector<int>> F;  // rows x ports
  std::vector<int> tree_elements;   // element indices in the spanning tree
  std::vector<int> chords;          // element index of each row
};

/// Impedance: spring s/k, damper 1/c, inerter 1/(b s), conductance 1/g.
template <class F>
RatFunc<F> element_impedance(const BasicElement<F>& e);

/// Checks endpoints, positivity and connectivity of the augmented graph.
/// Throws InvalidNetwork, NonpositiveValue or DisconnectedGraph.
template <class F>
void validate(const BasicNetwork<F>& net);

/// True iff the port edges contain no circuit. Throws DisconnectedGraph.
template <class F>
bool port_graph_extends_to_tree(const BasicNetwork<F>& net);

/// Builds the circuit matrix for the tree obtained by taking the port edges,
/// then element edges in `order` (default: index order) whenever they join
/// two components. Throws NotWellDefined if the ports contain a circuit.
template <class F>
CircuitStructure circuit_structure(const BasicNetwork<F>& net, const std::vector<int>& order = {});

/// Port admittance matrix F^T (B R B^T)^{-1} F. `order` selects the tree as in
/// circuit_structure; the result does not depend on it.
template <class F>
RfMatrix<F> admittance_matrix(const BasicNetwork<F>& net, const std::vector<int>& order = {});

/// Scalar admittance of a one-port. Throws PortCountMismatch.
template <class F>
RatFunc<F> driving_point(const BasicNetwork<F>& net);

/// Admittance matrix evaluated at s = s0 (s0 != 0 when inerters are present).
std::vector<std::vector<Rat>> admittance_at(const MechNetwork& net, const Rat& s0);

enum class PortGraphShape { LTree, PTree, Neither };
std::string_view to_string(PortGraphShape shape);

/// LTree if every port edge touches one common node, PTree if the port edges
/// form a simple path, Neither otherwise. Throws PortCircuit.
PortGraphShape classify_port_graph(const MechNetwork& net);

/// Count of elements by kind.
struct Census {
  int springs = 0, dampers = 0, inerters = 0, conductances = 0;
};
template <class F>
Census census(const BasicNetwork<F>& net);

/// The same network with values embedded in the surd field.
SurdNetwork to_surd(const MechNetwork& net);

}  // namespace mechsynth
