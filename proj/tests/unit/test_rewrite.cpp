#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfgs/be_algebra.hpp"
#include "hopfgs/rewrite.hpp"

using namespace hopfgs;

namespace {

/// Binomial coefficient, safe for small arguments.
long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Counit as the algebra map u_ij -> delta_ij, evaluated on an unreduced word.
Scalar eps_on_word(int n, const Word& w) {
  for (int g : w)
    if (g / n != g % n) return Scalar(0);
  return Scalar(1);
}

NCPoly random_poly(std::mt19937& rng, int gens, int max_degree, int terms) {
  NCPoly p;
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % static_cast<unsigned>(gens)));
    Scalar c(static_cast<int>(rng() % 7) - 3);
    if (!c.is_zero()) p[w] = c;
  }
  return p;
}

RewriteSystem sl2_system(const Scalar& q, int degree_bound) {
  ScalarMatrix E = {{Scalar(0), Scalar(1)}, {Scalar(-1) / q, Scalar(0)}};
  return RewriteSystem({"a", "b", "c", "d"}, derive_be_relations(E), degree_bound);
}

}  // namespace

TEST_CASE("relation derivation preconditions") {
  CHECK_THROWS_AS(derive_be_relations({{Scalar(1)}}), ValidationError);
  ScalarMatrix singular = {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}};
  CHECK_THROWS_AS(derive_be_relations(singular), ValidationError);
  ScalarMatrix E2 = {{Scalar(0), Scalar(1)}, {Scalar(-1) / Scalar(2), Scalar(0)}};
  CHECK(derive_be_relations(E2).size() == 8);  // 2 n^2 bilinear relations
}

TEST_CASE("standard monomial counts match the commutative coordinate ring") {
  RewriteSystem q2 = sl2_system(Scalar(2), 5);
  RewriteSystem q1 = sl2_system(Scalar(1), 5);
  for (int d = 0; d <= 5; ++d) {
    auto words_q2 = q2.normal_words(d);
    auto words_q1 = q1.normal_words(d);
    long long upto_q2 = static_cast<long long>(words_q2.size());
    CHECK(upto_q2 == static_cast<long long>(words_q1.size()));
    // Independent commutative oracle: dim of the degree-<=d filtration layer of
    // C[a,b,c,d]/(det - 1) is sum_{e<=d} (C(e+3,3) - C(e+1,3)).
    long long expect = 0;
    for (int e = 0; e <= d; ++e) expect += binom(e + 3, 3) - binom(e + 1, 3);
    CHECK(upto_q2 == expect);
  }
  // Degree-d pattern (1, 4, 9, 16, 25).
  for (int d = 0; d <= 4; ++d) {
    long long in_degree = static_cast<long long>(q2.normal_words(d).size()) -
                          (d ? static_cast<long long>(q2.normal_words(d - 1).size()) : 0);
    CHECK(in_degree == static_cast<long long>(d + 1) * (d + 1));
  }
}

TEST_CASE("confluence up to degree five") {
  RewriteSystem sys = sl2_system(Scalar(2), 5);
  auto rep = sys.check_confluence(5);
  CHECK(rep.confluent);
  CHECK(rep.overlaps_checked > 0);
  CHECK(rep.issues.empty());
}

TEST_CASE("rules strictly decrease the order and preserve parity") {
  RewriteSystem sys = sl2_system(Scalar(3), 4);
  DegLexLess less;
  for (const auto& rule : sys.rules()) {
    for (const auto& [w, c] : rule.rhs) {
      CHECK(less(w, rule.lhs));
      CHECK(w.size() % 2 == rule.lhs.size() % 2);  // parity homogeneity
      CHECK(w.size() <= rule.lhs.size());
    }
  }
}

TEST_CASE("normal form is idempotent and total on normal words") {
  RewriteSystem sys = sl2_system(Scalar(2), 6);
  CHECK(sys.normal_form(Word{}) == NCPoly{{Word{}, Scalar(1)}});

  std::mt19937 rng(1234);
  for (int t = 0; t < 100; ++t) {
    NCPoly x = random_poly(rng, 4, 3, 3);
    NCPoly nf = sys.normal_form(x);
    CHECK(sys.normal_form(nf) == nf);
    for (const auto& [w, c] : nf) CHECK(sys.is_normal_word(w));
  }
  for (const auto& w : sys.normal_words(3)) {
    NCPoly nf = sys.normal_form(w);
    REQUIRE(nf.size() == 1);
    CHECK(nf.begin()->first == w);
    CHECK(nf.begin()->second == Scalar(1));
  }
}

TEST_CASE("counit is multiplicative through reduction") {
  RewriteSystem sys = sl2_system(Scalar(2), 6);
  std::mt19937 rng(77);
  for (int t = 0; t < 50; ++t) {
    NCPoly x = random_poly(rng, 4, 2, 2);
    NCPoly y = random_poly(rng, 4, 2, 2);
    NCPoly xy = nc_concat(x, y);
    // Oracle: evaluate eps on unreduced words.
    auto eps = [&](const NCPoly& p) {
      Scalar acc(0);
      for (const auto& [w, c] : p) acc += c * eps_on_word(2, w);
      return acc;
    };
    Scalar direct = eps(x) * eps(y);
    Scalar reduced = eps(sys.normal_form(xy));
    CHECK(direct == reduced);
  }
}

TEST_CASE("degree overflow is loud") {
  RewriteSystem sys = sl2_system(Scalar(2), 3);
  Word fits{0, 0, 1};  // degree 3 = the bound
  CHECK_NOTHROW(sys.normal_form(fits));
  Word beyond{0, 0, 1, 1};
  CHECK_THROWS_AS(sys.normal_form(beyond), DegreeOverflowError);
}
