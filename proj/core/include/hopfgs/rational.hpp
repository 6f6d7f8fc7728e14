/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers with canonical form and parsing.
 *
 * Thin utility layer over boost::multiprecision::cpp_rational. The backing type
 * already maintains the canonical form (gcd-reduced, positive denominator); this
 * header adds deterministic printing, parsing, hashing and perfect-square probes
 * used by the normalizability machinery.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace hopfgs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Error type for malformed textual input (scalars, matrices, tables).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical printing: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& r);

/// Parse "n" or "n/d" (optional leading '-'). Throws ParseError on junk.
Rational parse_rational(const std::string& text);

/// Exact integer square root if n is a perfect square (n >= 0).
std::optional<BigInt> exact_sqrt(const BigInt& n);

/// Exact rational square root if r is a perfect square of a rational (r >= 0).
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace hopfgs
