#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hopfgs/scalar.hpp"

using namespace hopfgs;

TEST_CASE("canonical forms and printing") {
  CHECK(Scalar(3).str() == "3");
  CHECK(Scalar::ratio(1, 2).str() == "1/2");
  CHECK(Scalar::ratio(-1, 2).str() == "-1/2");
  CHECK(Scalar::q().str() == "q");
  Scalar q = Scalar::q();
  CHECK((q * q - Scalar(1)).str() == "q^2 - 1");
  CHECK((Scalar(1) / q).str() == "1/q");
}

TEST_CASE("polynomial fractions reduce to canonical form") {
  Scalar q = Scalar::q();
  // (q^2 - 1)/(q - 1) = q + 1 exactly.
  Scalar r = (q * q - Scalar(1)) / (q - Scalar(1));
  CHECK(r == q + Scalar(1));
  // Constants demote to the rational representation.
  Scalar s = (q + Scalar(1)) - q;
  CHECK(s.is_rational());
  CHECK(s.as_rational() == 1);
  // A genuinely symbolic value refuses as_rational.
  CHECK_THROWS_AS(q.as_rational(), std::domain_error);
}

TEST_CASE("specialization at rational points") {
  Scalar q = Scalar::q();
  Scalar f = (q * q - Scalar(1)) / q;  // q - 1/q
  CHECK(f.substitute_q(2) == Scalar::ratio(3, 2));
  CHECK(f.substitute_q(Rational(-1)) == Scalar(0));
  Scalar g = Scalar(1) / (q - Scalar(1));
  CHECK_THROWS_AS(g.substitute_q(1), std::domain_error);
}

TEST_CASE("parsing accepts everything str emits") {
  Scalar q = Scalar::q();
  std::vector<Scalar> samples = {
      Scalar(0),
      Scalar(7),
      Scalar::ratio(-3, 8),
      q,
      q * q - Scalar(1),
      (q * q - Scalar(1)) / q,
      Scalar(1) / (q + Scalar(2)),
      (q * q * q - Scalar::ratio(1, 2)) / (q * q + Scalar(1)),
  };
  for (const auto& s : samples) CHECK(Scalar::parse(s.str()) == s);
  CHECK(Scalar::parse("q^2-1") == q * q - Scalar(1));
  CHECK(Scalar::parse("(q+1)*(q-1)") == q * q - Scalar(1));
  CHECK(Scalar::parse("1/q + q") == (q * q + Scalar(1)) / q);
  CHECK_THROWS(Scalar::parse("q +"));
  CHECK_THROWS(Scalar::parse("(q"));
}

TEST_CASE("field axioms on randomized samples") {
  std::mt19937 rng(20240817);
  auto random_scalar = [&]() {
    int num = static_cast<int>(rng() % 9) - 4;
    int den = 1 + static_cast<int>(rng() % 4);
    Scalar s = Scalar::ratio(num, den);
    if (rng() % 2) s = s * Scalar::q() + Scalar(static_cast<int>(rng() % 3));
    if (rng() % 3 == 0) {
      Scalar d = Scalar::q() + Scalar(1 + static_cast<int>(rng() % 3));
      s = s / d;
    }
    return s;
  };
  for (int trial = 0; trial < 40; ++trial) {
    Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Scalar(1));
      CHECK((b / a) * a == b);
    }
  }
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}
