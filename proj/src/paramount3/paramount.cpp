#include "mechsynth/paramount.hpp"

#include <cctype>

#include "mechsynth/error.hpp"

namespace mechsynth {

namespace {

// Index of the stored entry for (i, j).
int slot(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2) throw Error(ErrorKind::InternalInvariant, "matrix index out of range");
  if (i == j) return i;
  int lo = i < j ? i : j, hi = i < j ? j : i;
  return lo == 0 ? (hi == 1 ? 3 : 4) : 5;
}

template <class M>
auto& entry(M& m, int i, int j) {
  switch (slot(i, j)) {
    case 0: return m.y11;
    case 1: return m.y22;
    case 2: return m.y33;
    case 3: return m.y12;
    case 4: return m.y13;
    default: return m.y23;
  }
}

Rat minor2(const PortMatrix3& m, int r0, int r1, int c0, int c1) {
  return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
}

}  // namespace

const Rat& PortMatrix3::at(int i, int j) const { return entry(*this, i, j); }
Rat& PortMatrix3::at(int i, int j) { return entry(*this, i, j); }

Rat PortMatrix3::det() const {
  return y11 * (y22 * y33 - y23 * y23) - y12 * (y12 * y33 - y23 * y13) + y13 * (y12 * y23 - y22 * y13);
}

PortMatrix3 PortMatrix3::permuted(const std::array<int, 3>& p) const {
  PortMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) out.at(i, j) = at(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::string PortMatrix3::str() const {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < 3; ++j) out += (j ? "," : "") + at(i, j).str();
    out += "]";
  }
  return out + "]";
}

PortMatrix3 PortMatrix3::parse(std::string_view text) {
  std::array<std::array<Rat, 3>, 3> v;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw Error(ErrorKind::ParseError, std::string("expected '") + c + "' in matrix '" + std::string(text) + "'");
    }
    ++pos;
  };
  expect('[');
  for (int i = 0; i < 3; ++i) {
    if (i) expect(',');
    expect('[');
    for (int j = 0; j < 3; ++j) {
      if (j) expect(',');
      skip();
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
      v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat::parse(text.substr(start, pos - start));
    }
    expect(']');
  }
  expect(']');
  skip();
  if (pos != text.size()) throw Error(ErrorKind::ParseError, "trailing text after matrix");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw Error(ErrorKind::ShapeMismatch, "matrix is not symmetric");
      }
    }
  }
  PortMatrix3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) m.at(i, j) = v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

PortMatrix3 PortMatrix3::identity() { return {1, 1, 1, 0, 0, 0}; }

PortMatrix3 SignPattern::apply(const PortMatrix3& m) const {
  PortMatrix3 out = m;
  out.y12 = m.y12 * Rat(d[0] * d[1]);
  out.y13 = m.y13 * Rat(d[0] * d[2]);
  out.y23 = m.y23 * Rat(d[1] * d[2]);
  return out;
}

std::string SignPattern::str() const {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) out += std::string(i ? "," : "") + (d[static_cast<std::size_t>(i)] > 0 ? "+" : "-");
  return out + ")";
}

const std::array<SignPattern, 4>& gray_patterns() {
  static const std::array<SignPattern, 4> patterns{
      SignPattern{{1, 1, 1}}, SignPattern{{1, 1, -1}}, SignPattern{{1, -1, -1}}, SignPattern{{1, -1, 1}}};
  return patterns;
}

const std::array<std::array<int, 3>, 6>& permutations3() {
  static const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

bool is_paramount(const PortMatrix3& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (m.at(i, i) < m.at(i, j).abs()) return false;
    }
  }
  static constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& r : pairs) {
    Rat principal = minor2(m, r[0], r[1], r[0], r[1]);
    for (const auto& c : pairs) {
      if (principal < minor2(m, r[0], r[1], c[0], c[1]).abs()) return false;
    }
  }
  return true;
}

std::optional<std::pair<SignPattern, PortMatrix3>> sign_normalize(const PortMatrix3& m, SignTarget target) {
  for (const SignPattern& p : gray_patterns()) {
    PortMatrix3 out = p.apply(m);
    bool ok = true;
    for (const Rat* v : {&out.y12, &out.y13, &out.y23}) {
      int s = v->sign();
      if ((target == SignTarget::AllOffDiagNonPositive && s > 0) ||
          (target == SignTarget::AllOffDiagNonNegative && s < 0)) {
        ok = false;
      }
    }
    if (ok) return std::pair{p, out};
  }
  return std::nullopt;
}

AlphaBeta alpha_beta(const PortMatrix3& g) {
  AlphaBeta ab;
  ab.a3 = g.y11;
  ab.a2 = g.y11 * g.y22 - g.y12 * g.y12;
  ab.a1 = g.y11 * g.y33 - g.y13 * g.y13;
  ab.a0 = g.det();
  ab.b3 = g.y22;
  ab.b2 = g.y33;
  ab.b1 = g.y22 * g.y33 - g.y23 * g.y23;
  return ab;
}

std::pair<bool, AlphaBeta> nonneg_definite_via_coeffs(const PortMatrix3& g) {
  AlphaBeta ab = alpha_beta(g);
  bool ok = true;
  for (const Rat* v : {&ab.a3, &ab.a2, &ab.a1, &ab.a0, &ab.b3, &ab.b2, &ab.b1}) {
    if (v->sign() < 0) ok = false;
  }
  return {ok, ab};
}

}  // namespace mechsynth
