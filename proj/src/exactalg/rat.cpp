#include "mechsynth/rat.hpp"

#include <cctype>

#include "mechsynth/error.hpp"

namespace mechsynth {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonpositiveValue: return "NonpositiveValue";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::PortCountMismatch: return "PortCountMismatch";
    case ErrorKind::PortCircuit: return "PortCircuit";
    case ErrorKind::InvalidNetwork: return "InvalidNetwork";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::WrongForm: return "WrongForm";
    case ErrorKind::Inadmissible: return "Inadmissible";
    case ErrorKind::NonnegativityViolation: return "NonnegativityViolation";
    case ErrorKind::BranchMismatch: return "BranchMismatch";
    case ErrorKind::TopologyUnavailable: return "TopologyUnavailable";
    case ErrorKind::CensusExceeded: return "CensusExceeded";
    case ErrorKind::NotParamount: return "NotParamount";
    case ErrorKind::IrrationalElement: return "IrrationalElement";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) {
      throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
    }
    return Rat(parse_int(s));
  }
  std::string_view n = trim(s.substr(0, slash));
  std::string_view d = trim(s.substr(slash + 1));
  if (!is_integer_literal(n) || !is_integer_literal(d) || d.front() == '-') {
    throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
  }
  return Rat(parse_int(n), parse_int(d));
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rat> Rat::sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = v_.get_num();
  mpz_class d = v_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(rn, rd);
}

mpz_class squarefree_part(const mpz_class& n) {
  mpz_class rest = n;
  mpz_class out = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  return out * rest;
}

}  // namespace mechsynth
