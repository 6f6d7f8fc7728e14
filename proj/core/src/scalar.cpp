#include "hopfgs/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace hopfgs {
namespace {

/// Build the canonical variant from an arbitrary polynomial fraction.
std::variant<Rational, RationalFunction> canonical(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("scalar with zero denominator");
  if (num.is_zero()) return Rational(0);
  Polynomial g = Polynomial::gcd(num, den);
  num = num.exact_div(g);
  den = den.exact_div(g);
  const Rational lead = den.leading_coefficient();
  num = num.scaled(Rational(1) / lead);
  den = den.scaled(Rational(1) / lead);
  if (den.degree() == 0 && num.is_constant()) {
    return num.constant_term();  // den is monic constant = 1
  }
  return RationalFunction{std::move(num), std::move(den)};
}

/// True when exactly one coefficient is nonzero (a monomial like 3, -q, q^2).
bool single_term(const Polynomial& p) {
  int nonzero = 0;
  for (const Rational& c : p.coefficients())
    if (c != 0) ++nonzero;
  return nonzero == 1;
}

}  // namespace

Scalar::Scalar(const Polynomial& num, const Polynomial& den) { v_ = canonical(num, den); }

Scalar Scalar::q() {
  Scalar s;
  s.v_ = RationalFunction{Polynomial::monomial(Rational(1), 1), Polynomial(Rational(1))};
  return s;
}

Scalar Scalar::ratio(const Rational& num, const Rational& den) {
  if (den == 0) throw std::domain_error("scalar with zero denominator");
  return Scalar(Rational(num / den));
}

bool Scalar::is_zero() const {
  return is_rational() && std::get<Rational>(v_) == 0;
}

const Rational& Scalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("symbolic scalar where a rational was required: " + str());
  return std::get<Rational>(v_);
}

RationalFunction Scalar::as_fraction() const {
  if (is_rational())
    return RationalFunction{Polynomial(std::get<Rational>(v_)), Polynomial(Rational(1))};
  return std::get<RationalFunction>(v_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() && o.is_rational())
    return Scalar(Rational(std::get<Rational>(v_) + std::get<Rational>(o.v_)));
  const RationalFunction a = as_fraction(), b = o.as_fraction();
  Scalar out;
  out.v_ = canonical(a.num * b.den + b.num * a.den, a.den * b.den);
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar out;
  if (is_rational()) {
    out.v_ = Rational(-std::get<Rational>(v_));
  } else {
    const auto& f = std::get<RationalFunction>(v_);
    out.v_ = RationalFunction{-f.num, f.den};
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() && o.is_rational())
    return Scalar(Rational(std::get<Rational>(v_) * std::get<Rational>(o.v_)));
  const RationalFunction a = as_fraction(), b = o.as_fraction();
  Scalar out;
  out.v_ = canonical(a.num * b.num, a.den * b.den);
  return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  if (is_rational() && o.is_rational())
    return Scalar(Rational(std::get<Rational>(v_) / std::get<Rational>(o.v_)));
  const RationalFunction a = as_fraction(), b = o.as_fraction();
  Scalar out;
  out.v_ = canonical(a.num * b.den, a.den * b.num);
  return out;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() != o.is_rational()) return false;  // canonical form ⇒ comparable directly
  if (is_rational()) return std::get<Rational>(v_) == std::get<Rational>(o.v_);
  const auto& a = std::get<RationalFunction>(v_);
  const auto& b = std::get<RationalFunction>(o.v_);
  return a.num == b.num && a.den == b.den;
}

Scalar Scalar::substitute_q(const Rational& point) const {
  if (is_rational()) return *this;
  const auto& f = std::get<RationalFunction>(v_);
  const Rational den = f.den.evaluate(point);
  if (den == 0)
    throw std::domain_error("denominator vanishes at q = " + to_string(point) + ": " + str());
  return Scalar(Rational(f.num.evaluate(point) / den));
}

std::string Scalar::str() const {
  if (is_rational()) return to_string(std::get<Rational>(v_));
  const auto& f = std::get<RationalFunction>(v_);
  if (f.den.degree() == 0) return f.num.str();  // monic constant den = 1
  // Bare num/den reads unambiguously when both sides are monomials (the
  // denominator is monic, hence q^k, so '/' binds as intended); otherwise
  // parenthesize both sides.
  if (single_term(f.num) && single_term(f.den)) return f.num.str() + "/" + f.den.str();
  return "(" + f.num.str() + ")/(" + f.den.str() + ")";
}

// ---------------------------------------------------------------------------
// Recursive-descent expression parser:  expr := term (('+'|'-') term)*
//                                       term := factor (('*'|'/') factor)*
//                                       factor := ('-')* atom ('^' int)?
//                                       atom := number | 'q' | '(' expr ')'
// ---------------------------------------------------------------------------
namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }

  Scalar parse_expr() {
    Scalar acc = parse_term();
    while (true) {
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Scalar parse_term() {
    Scalar acc = parse_factor();
    while (true) {
      if (eat('*')) {
        acc *= parse_factor();
      } else if (eat('/')) {
        acc /= parse_factor();
      } else {
        return acc;
      }
    }
  }

  Scalar parse_factor() {
    if (eat('-')) return -parse_factor();
    Scalar base = parse_atom();
    if (eat('^')) {
      long k = parse_int();
      Scalar out(1);
      Scalar b = k < 0 ? base.inverse() : base;
      for (long n = k < 0 ? -k : k; n > 0; --n) out *= b;
      return out;
    }
    return base;
  }

  long parse_int() {
    skip();
    bool neg = eat('-');
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected integer exponent at offset " + std::to_string(start) + " in '" + s + "'");
    long v = std::stol(s.substr(start, i - start));
    return neg ? -v : v;
  }

  Scalar parse_atom() {
    skip();
    if (i >= s.size()) throw ParseError("unexpected end of scalar expression: '" + s + "'");
    const char c = s[i];
    if (c == '(') {
      ++i;
      Scalar inner = parse_expr();
      if (!eat(')')) throw ParseError("missing ')' in '" + s + "'");
      return inner;
    }
    if (c == 'q') {
      ++i;
      return Scalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return Scalar(Rational(BigInt(s.substr(start, i - start))));
    }
    throw ParseError(std::string("unexpected character '") + c + "' in scalar expression '" + s + "'");
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Parser p(text);
  Scalar out = p.parse_expr();
  p.skip();
  if (p.i != text.size())
    throw ParseError("trailing junk in scalar expression '" + text + "'");
  return out;
}

}  // namespace hopfgs
