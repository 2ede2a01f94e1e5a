#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mechsynth/coeffs.hpp"
#include "mechsynth/paramount.hpp"
#include "mechsynth/synthesis.hpp"

namespace mechsynth {

// ---------------------------------------------------------------------------
// Quartic form (b4 = 1)

struct WQuantities {
  Rat w1, w2, w3, w;

  /// W1, W2, W3 >= 0 and W^2 = 4 W1 W2 W3.
  bool admissible() const;
};

/// W1 = a3 b3 - a2, W2 = a3 b2 - a1, W3 = b2 b3 - b1,
/// W = a0 + 2 a3 b2 b3 - a3 b1 - a2 b2 - a1 b3. Throws WrongForm unless b4 = 1.
WQuantities w_quantities(const CoefficientVector& cv);

/// G1 = a3, G2 = b3, G3 = b2, G4 = sqrt(W1), G5 = sqrt(W2), G6 = sgn(W) sqrt(W3).
/// Throws Inadmissible, or IrrationalElement when some W_i is not a rational square.
PortMatrix3 build_G(const CoefficientVector& cv);

/// The quartic-form coefficients of a spring three-port G (a0 = det G and so on).
CoefficientVector coeffs_from_G(const PortMatrix3& g);

enum class Fig2Case { A, B, C, D };
char to_char(Fig2Case c);
std::optional<Fig2Case> parse_fig2_case(char c);

struct Theorem5Result {
  enum class Kind { Cond1, Cond2, Reject };
  Kind kind = Kind::Reject;
  /// Names of the vanishing Condition-1 quantities, in the theorem's order.
  std::vector<std::string> witnesses;
  std::optional<Fig2Case> fig2_case;
  std::string reason;

  bool accepted() const { return kind != Kind::Reject; }
  /// "Theorem 5 Condition 1 (alpha3-W/(2W3)=0)", "Theorem 5 Condition 2(b)" or "reject: ...".
  std::string describe() const;
};

/// Throws NonnegativityViolation for a negative coefficient and WrongForm unless b4 = 1.
Theorem5Result classify_theorem5(const CoefficientVector& cv);

/// Element values of the Condition-2 configurations.
struct Fig2Values {
  Rat k1, k2, k3, b, c;
};

/// Throws BranchMismatch when classify_theorem5 does not return `which`.
Fig2Values fig2_values(const CoefficientVector& cv, Fig2Case which);

/// One network per case; element roles name the values ("k1".."k3", "b", "c").
using Fig2Catalog = std::map<Fig2Case, MechNetwork>;

/// The catalog compiled into the library (empty when the data file was absent at build time).
const Fig2Catalog& builtin_fig2_catalog();
Fig2Catalog parse_fig2_catalog(const std::string& text);
std::string format_fig2_catalog(const Fig2Catalog& catalog);

struct Fig2Recovery {
  /// Every topology matching each case, up to relabelling internal nodes and reversing the port.
  std::map<Fig2Case, std::vector<MechNetwork>> matches;
  long candidates = 0;
  /// First match of each case in enumeration order.
  Fig2Catalog catalog() const;
};

/// Enumerates one-ports on at most six nodes whose elements are exactly
/// {k1, k2, k3, b, c} and keeps those reproducing each case on random instances.
Fig2Recovery recover_fig2_topologies();

/// Catalog network for a Condition-2 input, verified against the oracle.
/// Throws BranchMismatch, TopologyUnavailable, OracleMismatch.
MechNetwork synth_fig2(const CoefficientVector& cv, Fig2Case which, const Fig2Catalog& catalog = builtin_fig2_catalog());

/// Series-parallel realization of a Condition-1 admittance with at most three
/// springs, one damper and one inerter. Throws CensusExceeded.
MechNetwork foster_synthesize(const RationalFunction& y);

// ---------------------------------------------------------------------------
// Two-port springs and the cubic form (b4 = 0)

struct TwoPortSpring {
  Rat k1, k2, k3;
  bool flipped = false;
  MechNetwork network;
};

/// Nodes 0, 1, 2 with port 1 = (1, 0) and port 2 = (0, 2), or (2, 0) when K12 < 0.
/// Zero-valued springs are left out. Throws NotParamount.
TwoPortSpring two_port_spring(const Rat& k11, const Rat& k12, const Rat& k22);

enum class Theorem6Mode { AsWritten, ScaleSearch };

struct Theorem6Result {
  std::optional<int> condition;
  /// Positive scale applied to every coefficient before the condition is checked.
  Rat lambda = Rat(1);
  std::string reason;

  bool accepted() const { return condition.has_value(); }
  std::string describe() const;
};

/// Throws NonnegativityViolation and WrongForm (b4 != 0).
Theorem6Result classify_theorem6(const CoefficientVector& cv, Theorem6Mode mode = Theorem6Mode::ScaleSearch);

/// Literal check of one condition.
bool theorem6_condition_holds(const CoefficientVector& cv, int condition);

/// Cubic-form network for cv.scaled(lambda). With exact = false an irrational k2
/// yields a surd netlist. Throws IrrationalElement, BranchMismatch, OracleMismatch.
SynthesisResult synth_fig3(const CoefficientVector& cv, int condition, const Rat& lambda, bool exact = true);

// ---------------------------------------------------------------------------
// Arbitrary numbers of springs

struct ArbitraryResult {
  enum class Kind { AtMostThree, ArbitraryOnly, NotRealizable };
  Kind kind = Kind::NotRealizable;
  /// Theorem 5 / Theorem 6 branch text for AtMostThree.
  std::string branch;
  /// Condition index for ArbitraryOnly.
  int condition = 0;
  std::string reason;

  std::string describe() const;
};

/// The five strict conditions for b4 = 1 (0 when none holds). Requires admissible W.
int arbitrary_condition(const CoefficientVector& cv);

/// Throws NonnegativityViolation.
ArbitraryResult classify_arbitrary_springs(const CoefficientVector& cv);

struct RegionQuantities {
  std::optional<Rat> m1, m1dag, m2, m2dag, m3;
  Rat lambda1, lambda2, lambda3, lambda4;
};

/// m-ratios with a zero divisor are left empty.
RegionQuantities region_quantities(const PortMatrix3& g);

enum class RegionClass { NotRealizable, ArbitrarySprings, AtMostThreeBoundary, AtMostThreeInteriorSegment };
std::string_view to_string(RegionClass c);

struct RegionPoint {
  RegionClass cls = RegionClass::NotRealizable;
  /// Vanishing quantity ("m1", "lambda2", ...), "condition<i>" for
  /// arbitrary-springs, or the failed principal minor for not-realizable.
  std::string witness;
};

RegionPoint classify_region(const PortMatrix3& g);

/// Value of a named quantity from classify_region at g; nullopt when undefined.
std::optional<Rat> region_witness_value(const PortMatrix3& g, const std::string& name);

}  // namespace mechsynth
