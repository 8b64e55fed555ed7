#include "jumploci/parse.hpp"

#include <cctype>

#include "jumploci/errors.hpp"

namespace jumploci {

namespace {

// Polynomials are parsed over x,y,z and the field generator t; t is kept as a
// fourth exponent slot until the end so the same parser serves min-polys.
struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  bool allowXYZ = true;
  bool allowT = false;
  const NumberField* field = nullptr;

  using P = Poly;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Poly parse_all() {
    Poly p = expr();
    skip();
    if (pos != s.size()) fail(std::string("unexpected character '") + s[pos] + "'");
    return p;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (at('+')) {
        ++pos;
        acc += term();
      } else if (at('-')) {
        ++pos;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (at('*')) {
      ++pos;
      acc = acc * unary();
    }
    skip();
    if (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '('))
      fail("implicit multiplication is not allowed");
    return acc;
  }

  Poly unary() {
    if (at('-')) {
      ++pos;
      return -unary();
    }
    if (at('+')) {
      ++pos;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (at('^')) {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected exponent");
      if (pos - start > 4) fail("exponent too large");
      int e = std::stoi(s.substr(start, pos - start));
      return base.pow(e);
    }
    return base;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  Poly atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly p = expr();
      if (!at(')')) fail("expected ')'");
      ++pos;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      if (at('/')) {
        ++pos;
        mpz_class den = integer();
        if (den == 0) fail("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Poly(Scalar(q));
      }
      return Poly(Scalar(num));
    }
    if (allowXYZ && (c == 'x' || c == 'y' || c == 'z')) {
      ++pos;
      return Poly::var(c - 'x');
    }
    if (c == 't' && allowT) {
      ++pos;
      if (field) return Poly(Scalar::generator(field));
      return Poly::var(0);
    }
    if (c == 't') fail("generator t used without a field");
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const NumberField* field) {
  Parser p{text};
  p.allowT = field != nullptr;
  p.field = field;
  return p.parse_all();
}

Scalar parse_scalar(const std::string& text, const NumberField* field) {
  Parser p{text};
  p.allowXYZ = false;
  p.allowT = field != nullptr;
  p.field = field;
  Poly v = p.parse_all();
  if (v.is_zero()) return Scalar();
  return v.coeff(Monomial());
}

std::vector<mpq_class> parse_min_poly(const std::string& text) {
  Parser p{text};
  p.allowXYZ = false;
  p.allowT = true;
  Poly v = p.parse_all();
  std::vector<mpq_class> out(static_cast<std::size_t>(std::max(v.degree(), 0)) + 1);
  for (auto& [m, c] : v.terms()) out[static_cast<std::size_t>(m.e[0])] = c.rational();
  return out;
}

Point parse_point(const std::string& text, const NumberField* field) {
  Point out;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = text.find(',', start);
    if ((i < 2) != (comma != std::string::npos)) throw ParseError("expected three comma-separated coordinates", start);
    std::string part = text.substr(start, i < 2 ? comma - start : std::string::npos);
    out[static_cast<std::size_t>(i)] = parse_scalar(part, field);
    start = comma + 1;
  }
  if (out[0].is_zero() && out[1].is_zero() && out[2].is_zero()) throw ParseError("zero coordinates", 0);
  return out;
}

}  // namespace jumploci
