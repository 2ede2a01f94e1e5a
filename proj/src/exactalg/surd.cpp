#include "mechsynth/surd.hpp"

#include <cctype>

#include "mechsynth/error.hpp"

namespace mechsynth {

Surd::Surd(Rat a, Rat b, const mpz_class& d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!b_.is_zero() && d_ <= 1) {
    throw Error(ErrorKind::InternalInvariant, "surd radicand must be a square-free integer > 1");
  }
  settle();
}

void Surd::settle() {
  if (b_.is_zero()) d_ = 0;
}

mpz_class Surd::common_radicand(const Surd& x, const Surd& y) {
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  if (x.d_ != y.d_) {
    throw Error(ErrorKind::InternalInvariant,
                "mixing sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ")");
  }
  return x.d_;
}

Surd Surd::sqrt_of(const Rat& r) {
  if (r.sign() < 0) throw Error(ErrorKind::IrrationalElement, "square root of a negative value");
  if (auto q = r.sqrt()) return Surd(*q);
  // sqrt(n/m) = sqrt(n*m)/m, then pull square factors out of n*m.
  mpz_class nm = r.num() * r.den();
  mpz_class free = squarefree_part(nm);
  mpz_class square = nm / free;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), square.get_mpz_t());
  return Surd(Rat(0), Rat(root, r.den()), free);
}

int Surd::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 d.
  Rat lhs = a_ * a_;
  Rat rhs = b_ * b_ * Rat(d_);
  if (lhs == rhs) return 0;  // impossible for square-free d > 1, kept for completeness
  return lhs > rhs ? sa : sb;
}

Surd Surd::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero surd");
  Rat norm = a_ * a_ - b_ * b_ * Rat(d_);
  return Surd(a_ / norm, -b_ / norm, d_);
}

Surd& Surd::operator+=(const Surd& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  settle();
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  mpz_class d = common_radicand(*this, o);
  Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  settle();
  return *this;
}

std::string Surd::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out;
  if (!a_.is_zero()) out = a_.str() + (b_.sign() > 0 ? "+" : "-");
  else if (b_.sign() < 0) out = "-";
  Rat mag = b_.abs();
  if (mag != Rat(1)) out += mag.str() + "*";
  out += "sqrt(" + d_.get_str() + ")";
  return out;
}

namespace {

// Parses "[coef*]sqrt(d)" with an optional leading sign already stripped.
Surd parse_surd_term(std::string_view t, std::string_view whole) {
  auto pos = t.find("sqrt(");
  if (pos == std::string_view::npos || t.back() != ')') {
    throw Error(ErrorKind::ParseError, "malformed surd '" + std::string(whole) + "'");
  }
  Rat coef(1);
  if (pos > 0) {
    std::string_view c = t.substr(0, pos);
    if (c.back() != '*') throw Error(ErrorKind::ParseError, "malformed surd '" + std::string(whole) + "'");
    c.remove_suffix(1);
    coef = Rat::parse(c);
  }
  Rat radicand = Rat::parse(t.substr(pos + 5, t.size() - pos - 6));
  return Surd(coef) * Surd::sqrt_of(radicand);
}

}  // namespace

Surd Surd::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.find("sqrt") == std::string::npos) return Surd(Rat::parse(s));
  auto pos = s.find("sqrt(");
  // Split at the sign preceding the surd term (if the term is not leading).
  std::size_t split = std::string::npos;
  for (std::size_t i = pos; i-- > 0;) {
    if ((s[i] == '+' || s[i] == '-') && i > 0 && s[i - 1] != '/') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    std::string_view t = s;
    bool neg = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
      neg = t.front() == '-';
      t.remove_prefix(1);
    }
    Surd v = parse_surd_term(t, text);
    return neg ? -v : v;
  }
  Rat a = Rat::parse(std::string_view(s).substr(0, split));
  bool neg = s[split] == '-';
  Surd v = parse_surd_term(std::string_view(s).substr(split + 1), text);
  return Surd(a) + (neg ? -v : v);
}

}  // namespace mechsynth
