#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "mechsynth/paramount.hpp"
#include "mechsynth/synthesis.hpp"

namespace mechsynth {

struct LTreeCertificate {
  SignPattern pattern;
  std::array<Rat, 3> offdiag;  // |y12|, |y13|, |y23|
  std::array<Rat, 3> slack;    // y_ii minus the off-diagonal magnitudes of row i
  int zero_count = 0;

  bool valid() const;
  Json to_json() const;
};

struct PTreeCertificate {
  SignPattern pattern;
  /// permutation[k] is the original port (0-based) at path position k.
  std::array<int, 3> permutation{0, 1, 2};
  /// 'a', 'b' or 'c' according to which original port sits in the middle
  /// of the path (port 2, 3 or 1 respectively).
  char path_case = 'a';
  /// g12, g13, g14, g23, g24, g34 of the path network.
  std::array<Rat, 6> slack;
  int equality_count = 0;

  bool valid() const;
  Json to_json() const;
};

template <class C>
struct Checked {
  std::optional<C> certificate;
  std::string reason;  // set when rejected
  explicit operator bool() const { return certificate.has_value(); }
};

Checked<LTreeCertificate> check_ltree(const PortMatrix3& m);
Checked<PTreeCertificate> check_ptree(const PortMatrix3& m);

/// Star network on nodes 0..3 with port i across (i, 0). Throws InvalidCertificate.
MechNetwork synth_ltree(const LTreeCertificate& cert, const PortMatrix3& m);
/// Path network on nodes 1..4. Throws InvalidCertificate.
MechNetwork synth_ptree(const PTreeCertificate& cert, const PortMatrix3& m);

struct Theorem1Outcome {
  std::optional<SynthesisResult> result;
  std::string ltree_reason;
  std::string ptree_reason;
  explicit operator bool() const { return result.has_value(); }
};

/// L-tree first, then P-tree; the network is verified before it is returned
/// (OracleMismatch otherwise).
Theorem1Outcome theorem1(const PortMatrix3& m);

/// Constant admittance matrix of a three-port resistive network.
PortMatrix3 resistive_admittance(const MechNetwork& net);

/// Calls `visit` once per isomorphism class of three-port networks with at
/// most `max_elements` unit conductances on at most `max_vertices` vertices
/// whose ports extend to a tree. Ports keep their labels and orientation.
void enumerate_small_networks(int max_elements, int max_vertices,
                              const std::function<void(const MechNetwork&)>& visit);

}  // namespace mechsynth
