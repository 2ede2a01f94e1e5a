#include "mechsynth/poly.hpp"

#include <cctype>

namespace mechsynth {

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class d = c.den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  ints.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.num() * (den_lcm / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(mpz_class(v / content));
  return Poly(std::move(out));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, which stays integral for integral inputs.
Poly pseudo_remainder(const Poly& a, const Poly& b) {
  int delta = a.degree() - b.degree();
  Rat factor(1);
  for (int i = 0; i <= delta; ++i) factor *= b.lead();
  return divmod(a.scaled(factor), b).second;
}

Rat pow(const Rat& x, int e) {
  Rat out(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

Poly gcd(const Poly& a_in, const Poly& b_in) {
  if (a_in.is_zero()) return b_in.monic();
  if (b_in.is_zero()) return a_in.monic();
  Poly a = primitive_part(a_in);
  Poly b = primitive_part(b_in);
  if (a.degree() < b.degree()) std::swap(a, b);
  Rat g(1);
  Rat h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    Poly r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b).monic();
    if (r.degree() == 0) return Poly(Rat(1));
    a = b;
    b = r.scaled((g * pow(h, delta)).inverse());
    g = a.lead();
    // h <- g^delta * h^(1 - delta)
    if (delta > 0) h = pow(g, delta) / pow(h, delta - 1);
  }
}

Poly parse_coeff_list(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error(ErrorKind::ParseError, "coefficient list must look like [c0, c1, ...]");
  }
  std::vector<Rat> coeffs;
  std::string_view body(s);
  body = body.substr(1, body.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    coeffs.push_back(Rat::parse(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Poly(std::move(coeffs));
}

}  // namespace mechsynth
