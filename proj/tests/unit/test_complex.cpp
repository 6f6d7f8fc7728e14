#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfgs/complex.hpp"

using namespace hopfgs;

namespace {

SparseMatrix dense(int rows, int cols, const std::vector<std::vector<Scalar>>& data) {
  SparseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, data[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

int euler_from_dims(const std::vector<int>& v) {
  int chi = 0, sign = 1;
  for (int d : v) {
    chi += sign * d;
    sign = -sign;
  }
  return chi;
}

}  // namespace

TEST_CASE("two-term complexes") {
  {
    SparseMatrix d0(1, 1);  // zero map
    CochainComplex c({1, 1}, {d0});
    CHECK(c.homology_dims() == std::vector<int>{1, 1});
  }
  {
    SparseMatrix d0(1, 1);
    d0.set(0, 0, Scalar(1));
    CochainComplex c({1, 1}, {d0});
    CHECK(c.homology_dims() == std::vector<int>{0, 0});
    CHECK(c.ranks() == std::vector<int>{1});
  }
}

TEST_CASE("exact three-term complex has trivial homology") {
  SparseMatrix d0(2, 1);
  d0.set(0, 0, Scalar(1));
  d0.set(1, 0, Scalar(1));
  SparseMatrix d1(1, 2);
  d1.set(0, 0, Scalar(1));
  d1.set(0, 1, Scalar(-1));
  CochainComplex c({1, 2, 1}, {d0, d1});
  CHECK(c.homology_dims() == std::vector<int>{0, 0, 0});
}

TEST_CASE("construction validates d squared") {
  SparseMatrix d0(1, 1), d1(1, 1);
  d0.set(0, 0, Scalar(1));
  d1.set(0, 0, Scalar(1));
  CHECK_THROWS_AS(CochainComplex({1, 1, 1}, {d0, d1}), std::domain_error);

  CochainComplex c = CochainComplex::unchecked({1, 1, 1}, {d0, d1});
  auto failures = c.d_squared_check();
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].position == 0);
  CHECK(failures[0].row == 0);
  CHECK(failures[0].col == 0);
  CHECK(failures[0].value == "1");
}

TEST_CASE("shape validation") {
  SparseMatrix wrong(2, 3);
  CHECK_THROWS_AS(CochainComplex({1, 2}, {wrong}), std::domain_error);
}

TEST_CASE("four-term rank-one complex over Q") {
  // Frozen data with the shape of the length-3 computations at q = 2:
  // m = q + 1/q = 5/2, k = 1/m = 2/5.
  Scalar m = Scalar::ratio(5, 2), k = Scalar::ratio(2, 5);
  SparseMatrix d0 = dense(2, 2, {{Scalar(-1), k}, {m, Scalar(-1)}});
  SparseMatrix d1 = dense(2, 2, {{Scalar(1), k}, {m, Scalar(1)}});
  SparseMatrix d2 = dense(2, 2, {{-m, Scalar(1)}, {m * m, -m}});
  CochainComplex c({2, 2, 2, 2}, {d0, d1, d2});
  CHECK(c.ranks() == std::vector<int>{1, 1, 1});
  CHECK(c.homology_dims() == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("euler characteristic equals alternating homology sum") {
  std::vector<CochainComplex> pool;
  {
    SparseMatrix d0(1, 1);
    pool.push_back(CochainComplex({1, 1}, {d0}));
  }
  {
    SparseMatrix d0(2, 1), d1(1, 2);
    d0.set(0, 0, Scalar(1));
    d0.set(1, 0, Scalar(1));
    d1.set(0, 0, Scalar(1));
    d1.set(0, 1, Scalar(-1));
    pool.push_back(CochainComplex({1, 2, 1}, {d0, d1}));
  }
  for (const auto& c : pool)
    CHECK(euler_from_dims(c.dims()) == euler_from_dims(c.homology_dims()));
}
