#include "hopfgs/rational.hpp"

#include <cctype>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfgs {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

/// Optional sign followed by at least one digit; nothing else.
bool is_integer_literal(const std::string& s) {
  size_t start = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (start >= s.size()) return false;
  for (size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(const std::string& s, const std::string& whole) {
  if (!is_integer_literal(s)) throw ParseError("not a rational number: '" + whole + "'");
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("rational with zero denominator: " + text);
  return Rational(num, den);
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  const BigInt root = boost::multiprecision::sqrt(n);
  if (root * root == n) return root;
  return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const auto num = exact_sqrt(BigInt(boost::multiprecision::numerator(r)));
  if (!num) return std::nullopt;
  const auto den = exact_sqrt(BigInt(boost::multiprecision::denominator(r)));
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace hopfgs
