#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mechsynth/rat.hpp"

namespace mechsynth {

/// Symmetric 3x3 matrix stored as its six distinct entries.
struct PortMatrix3 {
  Rat y11, y22, y33, y12, y13, y23;

  /// Entry (i, j) with 0-based indices.
  const Rat& at(int i, int j) const;
  Rat& at(int i, int j);

  Rat det() const;
  /// Row/column i of the result is row/column perm[i] of this matrix.
  PortMatrix3 permuted(const std::array<int, 3>& perm) const;

  /// "[[1,1,0],[1,2,-1],[0,-1,1]]"
  std::string str() const;
  /// Parses the row-major text form; throws ParseError or ShapeMismatch (asymmetric input).
  static PortMatrix3 parse(std::string_view text);
  static PortMatrix3 identity();

  friend bool operator==(const PortMatrix3&, const PortMatrix3&) = default;
};

/// Cross-sign change: y'_ij = d_i d_j y_ij, with d_1 = +1.
struct SignPattern {
  std::array<int, 3> d{1, 1, 1};

  PortMatrix3 apply(const PortMatrix3& m) const;
  std::string str() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// (+,+,+), (+,+,-), (+,-,-), (+,-,+).
const std::array<SignPattern, 4>& gray_patterns();

/// The six orderings of {0,1,2} in lexicographic order.
const std::array<std::array<int, 3>, 6>& permutations3();

bool is_paramount(const PortMatrix3& m);

enum class SignTarget { AllOffDiagNonPositive, AllOffDiagNonNegative };

/// First pattern in Gray order reaching the target, or nullopt.
std::optional<std::pair<SignPattern, PortMatrix3>> sign_normalize(const PortMatrix3& m, SignTarget target);

struct AlphaBeta {
  Rat a3, a2, a1, a0, b3, b2, b1;
  friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

/// alpha3 = G1, alpha2 = G1G2 - G4^2, alpha1 = G1G3 - G5^2, alpha0 = det G,
/// beta3 = G2, beta2 = G3, beta1 = G2G3 - G6^2 with (G1..G6) = (y11,y22,y33,y12,y13,y23).
AlphaBeta alpha_beta(const PortMatrix3& g);

/// Non-negative definiteness decided from the seven coefficients.
std::pair<bool, AlphaBeta> nonneg_definite_via_coeffs(const PortMatrix3& g);

}  // namespace mechsynth
