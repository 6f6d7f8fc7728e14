/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over Q in the indeterminate q.
 *
 * Coefficient vector is always trimmed (no trailing zeros); the zero polynomial
 * has an empty coefficient vector and degree -1. Supplies the division/gcd
 * machinery backing the rational-function field Q(q).
 */
#pragma once

#include <string>
#include <vector>

#include "hopfgs/rational.hpp"

namespace hopfgs {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  /// coeffs[k] is the coefficient of q^k; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial c*q^k.
  static Polynomial monomial(const Rational& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading_coefficient() const;
  Rational constant_term() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Euclidean division: *this = q*divisor + r with deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Exact division; throws std::domain_error when the remainder is nonzero.
  Polynomial exact_div(const Polynomial& divisor) const;

  Rational evaluate(const Rational& point) const;

  /// Monic gcd (1 for coprime inputs, 0 only when both inputs are 0).
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial scaled(const Rational& c) const;
  /// Divide by the leading coefficient (this must be nonzero).
  Polynomial monic() const;

  /// Canonical text, e.g. "q^2 - 1/2*q + 3", "-q", "0".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hopfgs
