#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "mechsynth/netlist.hpp"
#include "support/oracles.hpp"

namespace mechsynth {
namespace {

using testing::Gen;

RationalFunction rf(const char* text) { return parse_rational_function(text); }

MechNetwork one_port(std::vector<Element> elements, std::vector<int> nodes = {0, 1}) {
  MechNetwork net;
  net.nodes = std::move(nodes);
  net.elements = std::move(elements);
  net.ports = {{1, 0}};
  return net;
}

Element spring(Rat k, int a, int b) { return {ElementKind::Spring, std::move(k), a, b, {}}; }
Element damper(Rat c, int a, int b) { return {ElementKind::Damper, std::move(c), a, b, {}}; }
Element inerter(Rat m, int a, int b) { return {ElementKind::Inerter, std::move(m), a, b, {}}; }
Element conductance(Rat g, int a, int b) { return {ElementKind::Conductance, std::move(g), a, b, {}}; }

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InternalInvariant;
}

TEST(ElementImpedance, Table) {
  EXPECT_EQ(element_impedance(spring(2, 0, 1)), rf("s/2"));
  EXPECT_EQ(element_impedance(inerter(3, 0, 1)), rf("1/(3s)"));
  EXPECT_EQ(element_impedance(conductance(Rat::parse("1/2"), 0, 1)), rf("2"));
  EXPECT_EQ(element_impedance(damper(4, 0, 1)), rf("1/4"));
  EXPECT_EQ(kind_of([] { element_impedance(spring(0, 0, 1)); }), ErrorKind::NonpositiveValue);
}

TEST(PortGraph, ExtendsToTree) {
  EXPECT_TRUE(port_graph_extends_to_tree(one_port({spring(1, 1, 0)})));

  MechNetwork parallel_ports = one_port({spring(1, 1, 0)});
  parallel_ports.ports.push_back({0, 1});
  EXPECT_FALSE(port_graph_extends_to_tree(parallel_ports));

  MechNetwork triangle;
  triangle.nodes = {1, 2, 3};
  triangle.ports = {{1, 2}, {2, 3}, {3, 1}};
  EXPECT_FALSE(port_graph_extends_to_tree(triangle));
  EXPECT_EQ(kind_of([&] { admittance_matrix(triangle); }), ErrorKind::NotWellDefined);

  MechNetwork split = one_port({spring(1, 2, 3)}, {0, 1, 2, 3});
  EXPECT_EQ(kind_of([&] { port_graph_extends_to_tree(split); }), ErrorKind::DisconnectedGraph);
}

TEST(CircuitStructure, SingleLoop) {
  CircuitStructure cs = circuit_structure(one_port({spring(1, 1, 0)}));
  ASSERT_EQ(cs.B.size(), 1u);
  EXPECT_EQ(cs.B[0], std::vector<int>{1});
  EXPECT_EQ(cs.F[0], std::vector<int>{-1});
  EXPECT_TRUE(cs.tree_elements.empty());
}

TEST(AdmittanceMatrix, SingleConductance) {
  auto y = admittance_matrix(one_port({conductance(5, 1, 0)}));
  EXPECT_EQ(y[0][0], rf("5"));
}

TEST(AdmittanceMatrix, ThreeSpringTwoPort) {
  MechNetwork net;
  net.nodes = {0, 1, 2};
  net.elements = {spring(1, 1, 0), spring(1, 1, 2), spring(1, 0, 2)};
  net.ports = {{1, 0}, {0, 2}};
  auto y = admittance_matrix(net);
  EXPECT_EQ(y[0][0], rf("2/s"));
  EXPECT_EQ(y[0][1], rf("1/s"));
  EXPECT_EQ(y[1][0], rf("1/s"));
  EXPECT_EQ(y[1][1], rf("2/s"));
  EXPECT_EQ(y, *testing::nodal_admittance(net));
}

// Port across nodes 1-0; k1 on (1,0); b and k3 on (1,2); c and k2 on (2,0).
MechNetwork bridge(Rat b, Rat c, Rat k1, Rat k2, Rat k3) {
  return one_port({spring(k1, 1, 0), inerter(b, 1, 2), spring(k3, 1, 2), damper(c, 2, 0), spring(k2, 2, 0)},
                  {0, 1, 2});
}

TEST(AdmittanceMatrix, BridgeWithUnitElements) {
  EXPECT_EQ(driving_point(bridge(1, 1, 1, 1, 1)), rf("(s^3+2s^2+2s+3)/(s^3+s^2+2s)"));
}

TEST(DrivingPoint, SeriesSpringDamper) {
  Rat k(3), c(5);
  MechNetwork net = one_port({spring(k, 1, 2), damper(c, 2, 0)}, {0, 1, 2});
  RationalFunction series = (element_impedance(net.elements[0]) + element_impedance(net.elements[1])).inverse();
  EXPECT_EQ(driving_point(net), series);
  EXPECT_EQ(driving_point(net), rf("15/(5s+3)"));
}

TEST(DrivingPoint, ParallelTriple) {
  EXPECT_EQ(driving_point(one_port({inerter(1, 1, 0), damper(1, 1, 0), spring(1, 1, 0)})), rf("(s^2+s+1)/s"));
  EXPECT_EQ(driving_point(one_port({spring(7, 1, 0)})), rf("7/s"));
}

TEST(DrivingPoint, PortCount) {
  MechNetwork net = one_port({spring(1, 1, 0), spring(1, 2, 0)}, {0, 1, 2});
  net.ports.push_back({2, 0});
  EXPECT_EQ(kind_of([&] { driving_point(net); }), ErrorKind::PortCountMismatch);
}

TEST(AdmittanceMatrix, NoChordsGivesZero) {
  MechNetwork tree;
  tree.nodes = {0, 1, 2, 3};
  tree.elements = {spring(1, 1, 2)};
  tree.ports = {{1, 0}, {2, 3}};
  for (const auto& row : admittance_matrix(tree)) {
    for (const auto& v : row) EXPECT_TRUE(v.is_zero());
  }
}

TEST(PortGraphShape, Classification) {
  MechNetwork net;
  net.nodes = {0, 1, 2, 3, 4};
  net.ports = {{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(classify_port_graph(net), PortGraphShape::LTree);
  net.ports = {{1, 2}, {2, 3}, {3, 4}};
  EXPECT_EQ(classify_port_graph(net), PortGraphShape::PTree);
  net.ports = {{0, 1}, {0, 2}, {3, 4}};
  EXPECT_EQ(classify_port_graph(net), PortGraphShape::Neither);
  net.ports = {{1, 2}, {2, 3}, {3, 1}};
  EXPECT_EQ(kind_of([&] { classify_port_graph(net); }), ErrorKind::PortCircuit);
}

TEST(Netlist, RoundTripAndFieldOrder) {
  MechNetwork net = bridge(1, 2, Rat::parse("3/5"), 4, 5);
  net.elements[0].role = "k1";
  std::string text = format_netlist(net);
  EXPECT_EQ(text.rfind(R"({"nodes":[0,1,2],"elements":[{"kind":"spring","value":"3/5","nodes":[1,0],"role":"k1"})", 0),
            0u);
  EXPECT_EQ(parse_netlist(text), net);
}

TEST(Netlist, RejectsFloats) {
  EXPECT_EQ(kind_of([] {
              parse_netlist(R"({"nodes":[0,1],"elements":[{"kind":"spring","value":0.5,"nodes":[1,0]}],"ports":[]})");
            }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] {
              parse_netlist(R"({"nodes":[0,1],"elements":[{"kind":"spring","value":"0.5","nodes":[1,0]}],"ports":[]})");
            }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_netlist("{"); }), ErrorKind::ParseError);
}

TEST(SurdNetwork, MatchesNodalOracle) {
  SurdNetwork net = to_surd(bridge(1, 2, 3, 4, 5));
  net.elements[2].value = Surd::sqrt_of(Rat(2));
  net.elements[4].value = Surd(Rat(1)) + Surd::sqrt_of(Rat(8));
  auto y = admittance_matrix(net);
  EXPECT_EQ(y, *testing::nodal_admittance(net));
}

TEST(NetmodelProperty, TreeIndependenceAndReciprocity) {
  Gen gen(21);
  for (int iter = 0; iter < 300; ++iter) {
    MechNetwork net = testing::random_network(gen, 7, 6, 3);
    if (!port_graph_extends_to_tree(net)) continue;
    auto y = admittance_matrix(net);
    std::vector<int> order(net.elements.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gen.engine());
    EXPECT_EQ(admittance_matrix(net, order), y) << format_netlist(net);
    for (std::size_t i = 0; i < y.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) EXPECT_EQ(y[i][j], y[j][i]);
    }
  }
}

TEST(NetmodelProperty, AgreesWithNodalOracle) {
  Gen gen(22);
  for (int iter = 0; iter < 300; ++iter) {
    MechNetwork net = testing::random_network(gen, 6, 6, 3);
    if (!port_graph_extends_to_tree(net)) continue;
    auto nodal = testing::nodal_admittance(net);
    ASSERT_TRUE(nodal.has_value()) << format_netlist(net);
    EXPECT_EQ(admittance_matrix(net), *nodal) << format_netlist(net);
  }
}

TEST(NetmodelProperty, SeriesParallelComposition) {
  Gen gen(23);
  for (int iter = 0; iter < 300; ++iter) {
    auto tree = testing::random_sp(gen, gen.integer(1, 6));
    MechNetwork net = testing::sp_network(tree);
    EXPECT_EQ(driving_point(net), testing::sp_admittance(tree)) << format_netlist(net);
  }
}

TEST(NetmodelProperty, WellDefinedIffSolvable) {
  Gen gen(24);
  int defined = 0, undefined = 0;
  for (int iter = 0; iter < 400; ++iter) {
    MechNetwork net = testing::random_network(gen, 7, 6, 3);
    bool tree = port_graph_extends_to_tree(net);
    (tree ? defined : undefined)++;
    EXPECT_EQ(testing::loop_matrix_nonsingular(net), tree) << format_netlist(net);
    EXPECT_EQ(testing::nodal_admittance(net).has_value(), tree) << format_netlist(net);
  }
  EXPECT_GT(defined, 0);
  EXPECT_GT(undefined, 0);
}

TEST(NetmodelProperty, PointEvaluationMatchesSymbolic) {
  Gen gen(25);
  for (int iter = 0; iter < 100; ++iter) {
    MechNetwork net = testing::random_network(gen, 5, 5, 2);
    if (!port_graph_extends_to_tree(net)) continue;
    auto y = admittance_matrix(net);
    for (int s : {2, 3, 5}) {
      auto ys = admittance_at(net, Rat(s));
      for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) EXPECT_EQ(ys[i][j], y[i][j].eval(Rat(s)));
      }
    }
  }
}

}  // namespace
}  // namespace mechsynth
