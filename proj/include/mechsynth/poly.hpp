#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mechsynth/error.hpp"
#include "mechsynth/rat.hpp"

namespace mechsynth {

/// Univariate polynomial in s over an exact field F (Rat or Surd).
///
/// Coefficients are stored in ascending degree with trailing zeros trimmed;
/// the empty coefficient vector is the zero polynomial.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(F c) { if (!c.is_zero()) c_.push_back(std::move(c)); }  // NOLINT
  template <std::integral T>
  Polynomial(T c) : Polynomial(F(c)) {}  // NOLINT
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Polynomial s() { return Polynomial(std::vector<F>{F(0), F(1)}); }
  static Polynomial monomial(const F& c, int degree) {
    std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }

  const std::vector<F>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  F coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : F(0);
  }
  const F& lead() const {
    if (c_.empty()) throw Error(ErrorKind::InternalInvariant, "leading coefficient of zero polynomial");
    return c_.back();
  }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(-s).
  Polynomial reflect() const {
    std::vector<F> v = c_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    std::vector<F> v = c_;
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }

  Polynomial scaled(const F& k) const {
    std::vector<F> v = c_;
    for (auto& x : v) x = x * k;
    return Polynomial(std::move(v));
  }
  Polynomial monic() const { return is_zero() ? *this : scaled(F(1) / lead()); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    Polynomial r = a;
    if (a.degree() < b.degree()) return {Polynomial(), r};
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
    F inv_lead = F(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      F factor = r.lead() * inv_lead;
      q[static_cast<std::size_t>(shift)] = factor;
      std::vector<F>& rc = r.c_;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        rc[j + static_cast<std::size_t>(shift)] -= factor * b.c_[j];
      }
      // The leading term cancels exactly; drop it even if F rounding were possible.
      rc.pop_back();
      r.trim();
    }
    return {Polynomial(std::move(q)), r};
  }

  /// Division that must be exact; a nonzero remainder is an internal error.
  friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::InternalInvariant, "inexact polynomial division");
    return q;
  }

  /// Coefficient list text form, ascending degree: "[2, 2, 1, 1]".
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += c_[i].str();
    }
    return out + "]";
  }

  /// Expression form in s, descending degree: "s^3+2*s^2+1".
  std::string expr() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      std::string cs = c.str();
      bool simple = cs.find_first_of("+-/*", 1) == std::string::npos;
      bool neg = simple && c.sign() < 0;
      if (!out.empty()) out += neg ? "-" : "+";
      else if (neg) out += "-";
      std::string mag = neg ? cs.substr(1) : cs;
      if (!simple) mag = "(" + cs + ")";
      if (i == 0) {
        out += mag;
      } else {
        if (mag != "1") out += mag + "*";
        out += i == 1 ? "s" : "s^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

using Poly = Polynomial<Rat>;

/// Monic greatest common divisor over a generic field (plain Euclid).
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic gcd over Q via the subresultant remainder sequence on integer
/// primitive parts.
Poly gcd(const Poly& a, const Poly& b);

/// Primitive integer polynomial proportional to p (positive leading coefficient).
Poly primitive_part(const Poly& p);

/// Parses "[c0, c1, ...]" (ascending degree, exact rationals).
Poly parse_coeff_list(std::string_view text);

}  // namespace mechsynth
