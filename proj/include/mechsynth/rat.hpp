#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace mechsynth {

/// Exact rational number backed by GMP.
///
/// Always canonical: denominator positive, numerator and denominator coprime,
/// zero stored as 0/1. Values are immutable from the caller's point of view;
/// every arithmetic operator returns a new Rat.
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses "p", "-p", or "p/q". Decimal points and exponents are rejected.
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inverse() const;

  /// Exact square root when this is the square of a rational.
  std::optional<Rat> sqrt() const;

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

/// Square-free part of a positive integer (trial division; fine for desk-scale values).
mpz_class squarefree_part(const mpz_class& n);

}  // namespace mechsynth
