/**
 * @file scalar.hpp
 * @brief Field scalars: exact rationals or reduced univariate rational functions in q.
 *
 * A Scalar is either a Rational or a RationalFunction num/den with gcd(num,den)=1
 * and monic den. Canonical-form invariant: a rational function that is constant is
 *always stored in the Rational alternative, so representation equality is value
 * equality. Mixed arithmetic promotes to Q(q) and demotes back when constant.
 */
#pragma once

#include <string>
#include <variant>

#include "hopfgs/polynomial.hpp"
#include "hopfgs/rational.hpp"

namespace hopfgs {

/// Reduced fraction of two polynomials; canonical: gcd(num,den) = 1, den monic.
struct RationalFunction {
  Polynomial num;
  Polynomial den;  // never zero
};

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int n) : v_(Rational(n)) {}  // NOLINT: implicit by design
  Scalar(const Rational& r) : v_(r) {}
  Scalar(Rational&& r) : v_(std::move(r)) {}
  /// Canonicalizes (reduce, monic denominator, demote constants).
  Scalar(const Polynomial& num, const Polynomial& den);

  /// The indeterminate q.
  static Scalar q();
  /// Fraction of two rationals.
  static Scalar ratio(const Rational& num, const Rational& den);

  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  /// Value as a rational; throws std::domain_error when genuinely symbolic.
  const Rational& as_rational() const;
  /// View as a rational function (constants are widened on the fly).
  RationalFunction as_fraction() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;

  /// Specialize q := point. Throws std::domain_error if the denominator vanishes there.
  Scalar substitute_q(const Rational& point) const;

  /// Canonical text: "3", "-1/2", "q", "q^2 - 1", "(q^2 - 1)/(q)".
  std::string str() const;

  /**
   * Parse an arithmetic expression in q: integers, rationals, + - * / ^, parentheses.
   * Accepts everything str() emits. Throws ParseError on malformed input.
   */
  static Scalar parse(const std::string& text);

 private:
  std::variant<Rational, RationalFunction> v_;
};

}  // namespace hopfgs
