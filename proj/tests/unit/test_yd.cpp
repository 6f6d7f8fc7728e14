#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfgs/group_algebra.hpp"
#include "hopfgs/yd.hpp"

using namespace hopfgs;

namespace {

std::vector<int> carriers_up_to(const BEAlgebra& A, const Comodule& V, int deg) {
  std::vector<int> out;
  for (int v = 0; v < V.dim; ++v)
    for (int x : A.basis_up_to(deg)) out.push_back(v * A.dim() + x);
  return out;
}

}  // namespace

TEST_CASE("trivial YD module") {
  GroupAlgebra A(CayleyTable::builtin("Z2"));
  YDModule T = trivial_yd(A);
  CHECK(T.dim == 1);
  CHECK(check_yd_full(T).pass);
}

TEST_CASE("free YD module over a group algebra") {
  GroupAlgebra A(CayleyTable::builtin("S3"));
  YDModule Y = free_yd(trivial_comodule(A));
  CHECK(Y.dim == 6);
  CHECK(check_yd_full(Y).pass);
  // The coadjoint coaction of a group algebra is trivial:
  // g ↦ g ⊗ S(g)·1·g = g ⊗ e.
  for (int g = 0; g < 6; ++g) {
    auto co = Y.coaction(g);
    REQUIRE(co.size() == 1);
    CHECK(co[0].first == g);
    CHECK(co[0].second == A.unit());
  }
  // Action is right multiplication: e_g ← e_h = e_{gh}.
  const CayleyTable& G = A.group();
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h)
      CHECK(Y.act(g, h) == SparseVec{{G.table[g][h], Scalar(1)}});
}

TEST_CASE("free YD module over quantum sl2") {
  // The compatibility law multiplies S(a(1)) * leg * a(3); carriers of degree
  // <= 2 with algebra elements of degree <= 3 need headroom well past the
  // carrier degree, so build with a generous truncation bound.
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 9);
  Comodule V = fundamental_comodule(A);
  YDModule Y = free_yd(V);
  const int adim = A.dim();
  CHECK(Y.dim == 2 * adim);

  // α(v⊗1) = v₍₀₎ ⊗ 1 ⊗ v₍₁₎: column 0 of V has legs (e_0, a) and (e_1, c).
  auto co = Y.coaction(0 * adim + 0);
  REQUIRE(co.size() == 2);
  CHECK(co[0].first == 0 * adim + 0);
  CHECK(co[0].second == SparseVec{{A.generator_id(0, 0), Scalar(1)}});
  CHECK(co[1].first == 1 * adim + 0);
  CHECK(co[1].second == SparseVec{{A.generator_id(1, 0), Scalar(1)}});

  // Worst-case product degree is 2*(carrier + algebra degree) + 1 = 9 here.
  YDReport rep = check_yd(Y, carriers_up_to(A, V, 2), 2);
  CHECK(rep.pass);
  CHECK(rep.pairs_checked > 0);
}

TEST_CASE("adjoint YD module of a group algebra is conjugation") {
  GroupAlgebra A(CayleyTable::builtin("S3"));
  YDModule Ad = adjoint_yd(A);
  CHECK(Ad.dim == 6);
  CHECK(check_yd_full(Ad).pass);
  const CayleyTable& G = A.group();
  for (int g = 0; g < 6; ++g) {
    // Coaction is id⊗Δ: e_g ↦ e_g ⊗ g.
    auto co = Ad.coaction(g);
    REQUIRE(co.size() == 1);
    CHECK(co[0].first == g);
    CHECK(co[0].second == SparseVec{{g, Scalar(1)}});
    // Action is conjugation: e_g ← e_h = e_{h⁻¹gh}.
    for (int h = 0; h < 6; ++h) {
      int hinv = G.inverse[h];
      int conj = G.table[G.table[hinv][g]][h];
      CHECK(Ad.act(g, h) == SparseVec{{conj, Scalar(1)}});
    }
  }
}

TEST_CASE("cofree YD modules pass the compatibility law") {
  GroupAlgebra A(CayleyTable::builtin("S3"));
  RightModule M = trivial_right_module(A);
  YDModule Y = cofree_yd(M);
  CHECK(check_yd_full(Y).pass);
  // (x⊗a) ← 1 = x⊗a.
  for (int v = 0; v < Y.dim; ++v) CHECK(Y.act(v, A.group().identity) == SparseVec{{v, Scalar(1)}});
}

TEST_CASE("twist of the trivial bimodule equals the adjoint module") {
  FunctionAlgebra A(CayleyTable::builtin("S3"));
  YDModule Ad = adjoint_yd(A);
  YDModule Tw = twist_bimodule(trivial_bimodule(A));
  REQUIRE(Ad.dim == Tw.dim);
  for (int v = 0; v < Ad.dim; ++v) {
    CHECK(Ad.coaction(v) == Tw.coaction(v));
    for (int b = 0; b < A.dim(); ++b) CHECK(Ad.act(v, b) == Tw.act(v, b));
  }
  CHECK(check_yd_full(Tw).pass);
}

TEST_CASE("twists of concrete bimodules") {
  GroupAlgebra Z2(CayleyTable::builtin("Z2"));
  YDModule Yreg = twist_bimodule(regular_bimodule(Z2));
  CHECK(Yreg.dim == 4);
  CHECK(check_yd_full(Yreg).pass);

  FunctionAlgebra OS3(CayleyTable::builtin("S3"));
  YDModule Yrnd = twist_bimodule(random_bimodule2(OS3, 1234));
  CHECK(Yrnd.dim == 12);
  CHECK(check_yd_full(Yrnd).pass);
}

TEST_CASE("coadjoint powers") {
  GroupAlgebra Z2(CayleyTable::builtin("Z2"));
  YDModule P0 = coad_power(Z2, 0);
  CHECK(P0.dim == 1);
  CHECK(P0.name.find("^(0)") != std::string::npos);
  CHECK(check_yd_full(P0).pass);

  GroupAlgebra S3(CayleyTable::builtin("S3"));
  YDModule P1 = coad_power(S3, 1);
  CHECK(P1.dim == 6);
  for (int g = 0; g < 6; ++g) {
    auto co = P1.coaction(g);
    REQUIRE(co.size() == 1);
    CHECK(co[0].first == g);
    CHECK(co[0].second == S3.unit());
  }
  CHECK(check_yd_full(P1).pass);

  YDModule P2 = coad_power(Z2, 2);
  CHECK(P2.dim == 4);
  YDReport rep = check_yd_full(P2);
  CHECK(rep.pass);
  CHECK(rep.pairs_checked == 8);  // 4 carriers x 2 algebra basis elements

  CHECK_THROWS_AS(coad_power(Z2, -1), ValidationError);
}

TEST_CASE("coadjoint power over quantum sl2") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 9);
  YDModule P1 = coad_power(A, 1);
  std::vector<int> carriers;
  for (int x : A.basis_up_to(2)) carriers.push_back(x);
  CHECK(check_yd(P1, carriers, 2).pass);
}

TEST_CASE("YD morphisms") {
  GroupAlgebra Z2(CayleyTable::builtin("Z2"));
  YDModule Ad = adjoint_yd(Z2);
  std::vector<int> carriers{0, 1};

  SparseMatrix two = SparseMatrix::identity(2);
  two.set(0, 0, Scalar(2));
  two.set(1, 1, Scalar(2));
  CHECK(is_yd_morphism(Ad, Ad, two, carriers, 0));

  // Over Z2 the adjoint action is trivial and the coaction is diagonal, so
  // every diagonal map is a morphism; the basis swap breaks colinearity.
  SparseMatrix swap(2, 2);
  swap.set(0, 1, Scalar(1));
  swap.set(1, 0, Scalar(1));
  std::string witness;
  CHECK(!is_yd_morphism(Ad, Ad, swap, carriers, 0, &witness));
  CHECK(!witness.empty());
}

TEST_CASE("adjoint restriction to the even subalgebra") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 9);
  AdjointRestrictionReport rep = adjoint_restriction_check(A, 3, 2);
  CHECK(rep.pass);
  CHECK(rep.pairs_checked == 30 * 10);  // deg<=3 basis x even deg<=2 basis
}

TEST_CASE("iota/mu splitting") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 9);
  Comodule V = fundamental_comodule(A);

  IotaMuReport t = check_iota_mu(A, trivial_comodule(A), 2, 99);
  CHECK(t.pass);
  CHECK(t.pairs_checked == 14);  // 1 x (1 + 4 + 9)
  CHECK(t.colinearity_samples == 20);

  // The fundamental comodule is only a B(E)-comodule, so the colinearity
  // samples are skipped, but the carrier-level identities still hold.
  IotaMuReport f = check_iota_mu(A, V, 2, 99);
  CHECK(f.pass);
  CHECK(f.pairs_checked == 28);
  CHECK(f.colinearity_samples == 0);

  // V*⊗V has even coaction legs, so the full check runs.
  IotaMuReport vv = check_iota_mu(A, tensor_comodule(dual_comodule(V), V), 2, 99);
  CHECK(vv.pass);
  CHECK(vv.pairs_checked == 4 * 14);
  CHECK(vv.colinearity_samples == 20);

  // Same seed, same report.
  IotaMuReport t2 = check_iota_mu(A, trivial_comodule(A), 2, 99);
  CHECK(t2.pass == t.pass);
  CHECK(t2.colinearity_samples == t.colinearity_samples);
}

TEST_CASE("symbolic q sanity for the splitting") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar::q(), 6);
  IotaMuReport t = check_iota_mu(A, trivial_comodule(A), 1, 7);
  CHECK(t.pass);
}
