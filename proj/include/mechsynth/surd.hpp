#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "mechsynth/rat.hpp"

namespace mechsynth {

/// Element of the quadratic field Q(sqrt(d)): a + b*sqrt(d).
///
/// d is a square-free integer > 1, or 0 when the value is rational (b == 0).
/// Mixing two values with different nonzero radicands is an error: every
/// computation that needs a surd lives inside a single extension.
class Surd {
 public:
  Surd() = default;
  template <std::integral T>
  Surd(T v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Surd(Rat a, Rat b, const mpz_class& d);

  /// sqrt(r) as an element of Q(sqrt(squarefree(r))). r must be >= 0.
  static Surd sqrt_of(const Rat& r);
  /// Parses "a", "a+b*sqrt(d)", "a-b*sqrt(d)", "b*sqrt(d)", "sqrt(d)".
  static Surd parse(std::string_view text);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_part() const { return b_; }
  const mpz_class& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  Surd abs() const { return sign() < 0 ? -*this : *this; }
  Surd inverse() const;
  Surd conjugate() const { return Surd(a_, -b_, d_); }

  std::string str() const;

  Surd operator-() const { return Surd(-a_, -b_, d_); }
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o) { return *this += -o; }
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o) { return *this *= o.inverse(); }

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return y < x; }
  friend bool operator<=(const Surd& x, const Surd& y) { return !(y < x); }
  friend bool operator>=(const Surd& x, const Surd& y) { return !(x < y); }

  friend std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

 private:
  void settle();
  static mpz_class common_radicand(const Surd& x, const Surd& y);

  Rat a_;
  Rat b_;
  mpz_class d_{0};
};

}  // namespace mechsynth
