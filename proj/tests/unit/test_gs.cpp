#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hopfgs/gs.hpp"
#include "hopfgs/group_algebra.hpp"

using namespace hopfgs;

namespace {

std::vector<int> prefix(const std::vector<int>& v, size_t k) {
  return std::vector<int>(v.begin(), v.begin() + static_cast<long>(k));
}

}  // namespace

TEST_CASE("GS complex of C[Z2] with trivial coefficients") {
  GroupAlgebra A(CayleyTable::builtin("Z2"));
  ComplexWithBases C = gs_complex(A, trivial_yd(A), 3, 100000);
  CHECK(C.complex.dims() == std::vector<int>{1, 2, 4, 8, 16});
  CHECK(prefix(C.complex.homology_dims(), 4) == std::vector<int>{1, 0, 0, 0});
  // V = C: the degree-0 differential vanishes identically.
  CHECK(C.complex.differentials()[0].is_zero());
  CHECK(C.complex.d_squared_check().empty());
}

TEST_CASE("GS complex of C[S3] with trivial coefficients") {
  GroupAlgebra A(CayleyTable::builtin("S3"));
  ComplexWithBases C = gs_complex(A, trivial_yd(A), 2, 100000);
  CHECK(C.complex.dims() == std::vector<int>{1, 6, 36, 216});
  CHECK(prefix(C.complex.homology_dims(), 3) == std::vector<int>{1, 0, 0});
}

TEST_CASE("GS validation and budget") {
  GroupAlgebra A(CayleyTable::builtin("S3"));
  CHECK_THROWS_AS(gs_complex(A, trivial_yd(A), 0, 100000), ValidationError);
  CHECK_THROWS_AS(gs_complex(A, trivial_yd(A), 3, 100), BudgetExceededError);
}

TEST_CASE("ambient differential squares to zero") {
  GroupAlgebra A(CayleyTable::builtin("Z3"));
  YDModule V = adjoint_yd(A);
  SparseMatrix d0 = gs_ambient_differential(A, V, 0);
  SparseMatrix d1 = gs_ambient_differential(A, V, 1);
  CHECK((d1 * d0).is_zero());
}

TEST_CASE("Hochschild complex of C[Z2]") {
  GroupAlgebra A(CayleyTable::builtin("Z2"));
  Bimodule reg = regular_bimodule(A);
  CochainComplex C = hochschild_complex(A, reg, 3);
  CHECK(C.dims() == std::vector<int>{2, 4, 8, 16, 32});
  // H^0(A, A) is the center; C[Z2] is commutative of dimension 2, and the
  // higher groups vanish because the algebra is separable.
  std::vector<int> h = C.homology_dims();
  CHECK(h[0] == 2);
  CHECK(h[1] == 0);
  CHECK(h[2] == 0);
  CHECK(h[3] == 0);

  Bimodule triv = trivial_bimodule(A);
  CHECK(hochschild_complex(A, triv, 2).homology_dims()[0] == 1);
}

TEST_CASE("homotopy certificate for the twisted complex") {
  GroupAlgebra A(CayleyTable::builtin("Z2"));
  // Two-sided integral with eps(t) = 1: the average of the group elements.
  SparseVec t{{0, Scalar::ratio(1, 2)}, {1, Scalar::ratio(1, 2)}};
  HomotopyReport rep = hochschild_homotopy_check(A, regular_bimodule(A), 3, t);
  CHECK(rep.pass);
  CHECK(rep.degrees_checked == 3);

  FunctionAlgebra O(CayleyTable::builtin("S3"));
  // For a function algebra the integral is delta_e.
  SparseVec de{{O.group().identity, Scalar(1)}};
  CHECK(hochschild_homotopy_check(O, trivial_bimodule(O), 2, de).pass);

  // A non-integral does not certify.
  SparseVec bad{{0, Scalar(1)}};
  CHECK(!hochschild_homotopy_check(A, regular_bimodule(A), 2, bad).pass);
}

TEST_CASE("averaging operator") {
  GroupAlgebra A(CayleyTable::builtin("S3"));
  YDModule V = trivial_yd(A);
  AveragingReport rep = check_averaging(A, V, 1, 50, 2024);
  CHECK(rep.pass);
  CHECK(rep.cochains_tested == 50);

  GroupAlgebra Z2(CayleyTable::builtin("Z2"));
  CHECK(check_averaging(Z2, adjoint_yd(Z2), 2, 50, 7).pass);
}

TEST_CASE("averaging fixes exactly the colinear maps") {
  GroupAlgebra A(CayleyTable::builtin("Z3"));
  YDModule V = adjoint_yd(A);
  Comodule X = coad_power(A, 1).as_comodule();
  Comodule W = V.as_comodule();

  HomSpaceBasis hom = colinear_hom(X, W);
  REQUIRE(hom.dim() > 0);
  SparseMatrix f = hom.matrix(0);
  CHECK(average_map(X, W, f) == f);

  // A generic non-colinear map moves, and its average is idempotent.
  SparseMatrix g(W.dim, X.dim);
  g.set(1, 0, Scalar(1));
  SparseMatrix mg = average_map(X, W, g);
  CHECK(mg != g);
  CHECK(average_map(X, W, mg) == mg);
  std::string witness;
  CHECK(is_colinear(X, W, mg, &witness));
}

TEST_CASE("GS complex equals the Hochschild complex") {
  GroupAlgebra Z2(CayleyTable::builtin("Z2"));
  EquivalenceReport r1 = gs_equals_hochschild_check(Z2, regular_bimodule(Z2), 2, 1000000);
  CHECK(r1.pass);
  CHECK(r1.gs_dims == r1.hoch_dims);
  CHECK(r1.gs_homology == r1.hoch_homology);
  CHECK(r1.gs_homology[0] == 2);

  EquivalenceReport r2 = gs_equals_hochschild_check(Z2, random_bimodule2(Z2, 321), 2, 1000000);
  CHECK(r2.pass);
  CHECK(r2.gs_dims == r2.hoch_dims);

  GroupAlgebra S3(CayleyTable::builtin("S3"));
  EquivalenceReport r3 = gs_equals_hochschild_check(S3, trivial_bimodule(S3), 1, 1000000);
  CHECK(r3.pass);
  CHECK(r3.gs_dims == std::vector<int>{1, 6, 36});
}

TEST_CASE("fault injection is caught") {
  GroupAlgebra A(CayleyTable::builtin("Z2"));
  ComplexWithBases C = gs_complex(A, trivial_yd(A), 2, 100000);
  CHECK(C.complex.d_squared_check().empty());

  // d0 vanishes and d1 is injective (H^1 = 0 with zero image below), so any
  // nonzero fake d0 must break d1*d0 = 0.
  std::vector<SparseMatrix> ds = C.complex.differentials();
  REQUIRE(ds[0].is_zero());
  ds[0].set(0, 0, Scalar(1));
  CochainComplex broken = CochainComplex::unchecked(C.complex.dims(), ds);
  auto failures = broken.d_squared_check();
  REQUIRE(!failures.empty());
  CHECK(failures[0].position == 0);
}
