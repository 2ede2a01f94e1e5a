#include "mechsynth/ratfunc.hpp"

#include <cctype>

namespace mechsynth {

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op) {
  switch (op) {
    case RfOp::Add: return a + b;
    case RfOp::Sub: return a - b;
    case RfOp::Mul: return a * b;
    case RfOp::Div: return a / b;
    case RfOp::Inv: return a.inverse();
  }
  throw Error(ErrorKind::InternalInvariant, "unknown rational-function operation");
}

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary | implicit-unary)*
// unary  := ('-'|'+') unary | power
// power  := atom ('^' integer)?
// atom   := integer | 's' | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFunction expr() {
    RationalFunction v = term();
    while (true) {
      char c = peek();
      if (c == '+') { ++pos_; v = v + term(); }
      else if (c == '-') { ++pos_; v = v - term(); }
      else return v;
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    while (true) {
      char c = peek();
      if (c == '*') { ++pos_; v = v * unary(); }
      else if (c == '/') { ++pos_; v = v / unary(); }
      else if (c == '(' || c == 's' || std::isdigit(static_cast<unsigned char>(c))) v = v * power();
      else return v;
    }
  }

  RationalFunction unary() {
    char c = peek();
    if (c == '-') { ++pos_; return -unary(); }
    if (c == '+') { ++pos_; return unary(); }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      RationalFunction out(1);
      for (int i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  RationalFunction atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 's') {
      ++pos_;
      return RationalFunction(Poly::s());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        fail("floating-point literal");
      }
      return RationalFunction(Rat::parse(text_.substr(start, pos_ - start)));
    }
    if (c == '.') fail("floating-point literal");
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace mechsynth
