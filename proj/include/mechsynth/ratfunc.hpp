#pragma once

#include <string>
#include <string_view>

#include "mechsynth/poly.hpp"

namespace mechsynth {

/// Exact ratio of polynomials in s.
///
/// Canonical form: numerator and denominator coprime, denominator monic (so
/// its leading coefficient is positive). Two equal functions therefore have
/// identical representations and == is structural.
template <class F>
class RatFunc {
 public:
  RatFunc() : den_(F(1)) {}
  RatFunc(F c) : num_(std::move(c)), den_(F(1)) {}  // NOLINT
  template <std::integral T>
  RatFunc(T c) : RatFunc(F(c)) {}  // NOLINT
  RatFunc(Polynomial<F> p) : num_(std::move(p)), den_(F(1)) {}  // NOLINT
  RatFunc(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Polynomial<F>& num() const { return num_; }
  const Polynomial<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  F eval(const F& x) const {
    F d = den_.eval(x);
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "evaluation at a pole");
    return num_.eval(x) / d;
  }

  RatFunc inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero function");
    return RatFunc(den_, num_);
  }

  /// f(-s).
  RatFunc reflect() const { return RatFunc(num_.reflect(), den_.reflect()); }

  RatFunc operator-() const { return from_canonical(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "(num)/(den)" in s, or just the numerator when the denominator is 1.
  std::string str() const {
    if (den_.degree() == 0) return num_.expr();
    return "(" + num_.expr() + ")/(" + den_.expr() + ")";
  }

 private:
  static RatFunc from_canonical(Polynomial<F> num, Polynomial<F> den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial<F>(F(1));
      return;
    }
    Polynomial<F> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    F scale = F(1) / den_.lead();
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
  }

  Polynomial<F> num_;
  Polynomial<F> den_;
};

using RationalFunction = RatFunc<Rat>;

/// rf_normalize: canonical form of num/den. Throws ZeroDenominator when den = 0.
inline RationalFunction rf_normalize(const Poly& num, const Poly& den) { return {num, den}; }

enum class RfOp { Add, Sub, Mul, Div, Inv };

/// rf_arith: exact field arithmetic; `b` is ignored for Inv.
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op);

/// Parses an expression in s over exact rationals, e.g. "(s^3+2s^2+2s+3)/(s^3+s^2+2s)".
/// Supports + - * / ^ (non-negative integer exponents), parentheses, and
/// implicit multiplication ("2s", "3(s+1)"). Decimal literals are rejected.
RationalFunction parse_rational_function(std::string_view text);

}  // namespace mechsynth
