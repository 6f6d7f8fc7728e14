#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfgs/be_algebra.hpp"
#include "hopfgs/comodule.hpp"
#include "hopfgs/group_algebra.hpp"

using namespace hopfgs;

TEST_CASE("trivial comodule and its endomorphisms") {
  GroupAlgebra A(CayleyTable::builtin("S3"));
  Comodule t = trivial_comodule(A);
  CHECK(check_comodule(t).pass);
  HomSpaceBasis h = colinear_hom(t, t);
  CHECK(h.dim() == 1);
  CHECK(h.matrix(0) == SparseMatrix::identity(1));
}

TEST_CASE("fundamental comodule of quantum sl2") {
  Scalar q(2);
  BEAlgebra A = BEAlgebra::quantum_sl2(q, 6);
  Comodule V = fundamental_comodule(A);
  CHECK(V.dim == 2);
  CHECK(check_comodule(V).pass);

  // Schur: End(V) is one-dimensional, spanned by the identity.
  HomSpaceBasis end = colinear_hom(V, V);
  REQUIRE(end.dim() == 1);
  SparseMatrix m = end.matrix(0);
  CHECK(m.get(0, 0) == m.get(1, 1));
  CHECK(m.get(0, 1).is_zero());
  CHECK(m.get(1, 0).is_zero());

  CHECK(colinear_hom(trivial_comodule(A), V).dim() == 0);
  CHECK(colinear_hom(V, trivial_comodule(A)).dim() == 0);
}

TEST_CASE("invariant bilinear form on V (x) V") {
  Scalar q(2);
  BEAlgebra A = BEAlgebra::quantum_sl2(q, 6);
  Comodule V = fundamental_comodule(A);
  Comodule VV = tensor_comodule(V, V);
  CHECK(VV.dim == 4);
  CHECK(check_comodule(VV).pass);

  // Hom(V(x)V, C) is spanned by the defining bilinear form
  //   e_0(x)e_1 -> 1,  e_1(x)e_0 -> -1/q,
  // and Hom(C, V(x)V) by the dual coevaluation; both one-dimensional.
  HomSpaceBasis ev = colinear_hom(VV, trivial_comodule(A));
  REQUIRE(ev.dim() == 1);
  SparseMatrix f = ev.matrix(0);
  CHECK(f.get(0, 0).is_zero());
  CHECK(f.get(0, 3).is_zero());
  CHECK(f.get(0, 1) == -q * f.get(0, 2));

  HomSpaceBasis coev = colinear_hom(trivial_comodule(A), VV);
  CHECK(coev.dim() == 1);

  // End(V(x)V) is spanned by id and coev∘ev, hence two-dimensional
  // (Temperley-Lieb on two strands; q = 2 is not a root of unity).
  CHECK(colinear_hom(VV, VV).dim() == 2);

  // The flip map is not colinear for q != +-1.
  SparseMatrix flip(4, 4);
  flip.set(0, 0, Scalar(1));
  flip.set(1, 2, Scalar(1));
  flip.set(2, 1, Scalar(1));
  flip.set(3, 3, Scalar(1));
  std::string witness;
  CHECK(!is_colinear(VV, VV, flip, &witness));
  CHECK(!witness.empty());
  CHECK(is_colinear(VV, VV, SparseMatrix::identity(4)));
}

TEST_CASE("dual comodule is again a comodule and V is self-dual") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 6);
  Comodule V = fundamental_comodule(A);
  Comodule Vd = dual_comodule(V);
  CHECK(check_comodule(Vd).pass);
  CHECK(colinear_hom(V, Vd).dim() == 1);
}

TEST_CASE("hom basis coordinates") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 6);
  Comodule V = fundamental_comodule(A);
  Comodule VV = tensor_comodule(V, V);
  HomSpaceBasis h = colinear_hom(VV, VV);
  REQUIRE(h.dim() == 2);

  SparseVec combo;
  axpy(combo, Scalar(3), h.vectors[0]);
  axpy(combo, Scalar::ratio(-1, 2), h.vectors[1]);
  SparseVec coords = h.coordinates(combo);
  CHECK(coords == SparseVec{{0, Scalar(3)}, {1, Scalar::ratio(-1, 2)}});

  // The flip is not in the span.
  SparseVec flip_flat{{0 * 4 + 0, Scalar(1)},
                      {1 * 4 + 2, Scalar(1)},
                      {2 * 4 + 1, Scalar(1)},
                      {3 * 4 + 3, Scalar(1)}};
  CHECK_THROWS_AS(h.coordinates(flip_flat), std::domain_error);

  // flatten/matrix round trip.
  CHECK(h.flatten(h.matrix(1)) == h.vectors[1]);
}

TEST_CASE("tensor powers of a group algebra") {
  GroupAlgebra A(CayleyTable::builtin("Z2"));
  Comodule P0 = tensor_power_comodule(A, 0);
  CHECK(P0.dim == 1);
  CHECK(check_comodule(P0).pass);

  Comodule P2 = tensor_power_comodule(A, 2);
  CHECK(P2.dim == 4);
  CHECK(check_comodule(P2).pass);

  // Invariants of C[Z2]^{(x)2}: basis pairs (g, h) with gh = e, so dim 2.
  CHECK(colinear_hom(trivial_comodule(A), P2).dim() == 2);

  // Colinear endomorphisms preserve the Z2-grading; the two weight spaces
  // both have dimension 2, so End has dimension 2^2 + 2^2 = 8.
  CHECK(colinear_hom(P2, P2).dim() == 8);

  Comodule P1 = tensor_power_comodule(A, 1);
  CHECK(colinear_hom(P1, P1).dim() == 2);
}
