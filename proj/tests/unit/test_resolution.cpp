#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfgs/resolution.hpp"

using namespace hopfgs;

namespace {

std::vector<int> homology4(const CochainComplex& C) {
  std::vector<int> h = C.homology_dims();
  REQUIRE(h.size() == 4);
  return h;
}

}  // namespace

TEST_CASE("zero compositions and right linearity of the resolution maps") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 6);
  ResolutionReport rep = check_resolution(A, 2);
  CHECK(rep.pass);
  CHECK(rep.compositions_checked > 0);
  CHECK(rep.linearity_pairs > 0);
  CHECK(rep.failures.empty());

  BEAlgebra A3 = BEAlgebra::quantum_sl2(Scalar(3), 6);
  CHECK(check_resolution(A3, 2).pass);
}

TEST_CASE("resolution maps on concrete inputs") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 6);
  ResolutionMaps maps = resolution_maps(A);

  // eps-hat is the counit.
  CHECK(maps.eps_hat(A.unit()) == Scalar(1));
  int b = A.generator_id(0, 1);
  CHECK(maps.eps_hat(SparseVec{{b, Scalar(1)}}) == Scalar(0));

  // phi3 followed by eps-hat vanishes on every slot at x = 1.
  for (int slot = 0; slot < 4; ++slot)
    CHECK(maps.eps_hat(maps.phi3(slot, A.unit())) == Scalar(0));

  // phi2 ∘ phi1 = 0 at x = 1: accumulate per target slot.
  auto first = maps.phi1(A.unit());
  for (int target = 0; target < 4; ++target) {
    SparseVec acc;
    for (int slot = 0; slot < 4; ++slot)
      axpy(acc, Scalar(1), maps.phi2(slot, first[static_cast<size_t>(slot)])[static_cast<size_t>(target)]);
    CHECK(acc.empty());
  }
}

TEST_CASE("invariant functional is the evaluation pairing") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 6);
  SparseVec f = invariant_functional(A);
  CHECK(f == SparseVec{{0, Scalar(1)}, {3, Scalar(1)}});
}

TEST_CASE("four-term complex over the full algebra") {
  CochainComplex C2 = resolution_complex_sl2(Scalar(2));
  CHECK(C2.dims() == std::vector<int>{1, 1, 1, 1});
  CHECK(homology4(C2) == std::vector<int>{1, 0, 0, 1});
  CHECK(C2.ranks() == std::vector<int>{0, 1, 0});

  CochainComplex C3 = resolution_complex_sl2(Scalar(3));
  CHECK(homology4(C3) == std::vector<int>{1, 0, 0, 1});

  CochainComplex Cs = resolution_complex_sl2(Scalar::q());
  CHECK(homology4(Cs) == std::vector<int>{1, 0, 0, 1});
  // The middle differential is q-independent, so its entry is plain rational.
  CHECK(Cs.differentials()[1].get(0, 0).is_rational());
  CHECK(Cs.differentials()[1] == C2.differentials()[1]);
}

TEST_CASE("four-term complex over the even subalgebra") {
  for (int qi : {1, 2, 3}) {
    CAPTURE(qi);
    CochainComplex C = resolution_complex_psl2(Scalar(qi));
    CHECK(C.dims() == std::vector<int>{2, 2, 2, 2});
    CHECK(homology4(C) == std::vector<int>{1, 0, 0, 1});
    CHECK(C.ranks() == std::vector<int>{1, 1, 1});
  }
  CochainComplex Cs = resolution_complex_psl2(Scalar::q());
  CHECK(homology4(Cs) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("invalid q is rejected") {
  CHECK_THROWS_AS(resolution_complex_sl2(Scalar(0)), ValidationError);
  CHECK_THROWS_AS(resolution_complex_psl2(Scalar(0)), ValidationError);
}

TEST_CASE("reconstructed psi bookkeeping") {
  BEAlgebra A = BEAlgebra::quantum_sl2(Scalar(2), 6);
  SparseVec f = invariant_functional(A);
  Scalar c1(5), c2(-3);
  int a = A.generator_id(0, 0), b = A.generator_id(0, 1), d = A.generator_id(1, 1);

  for (int slot = 0; slot < 4; ++slot) {
    // psi(w⊗b) = 0 and psi(w⊗d) = psi(w⊗a).
    CHECK(reconstruct_psi(A, f, slot, c1, c2, SparseVec{{b, Scalar(1)}}) == Scalar(0));
    CHECK(reconstruct_psi(A, f, slot, c1, c2, SparseVec{{d, Scalar(1)}}) ==
          reconstruct_psi(A, f, slot, c1, c2, SparseVec{{a, Scalar(1)}}));
    // Coordinates are recovered: psi(w⊗1) = c1·f(w), psi(w⊗chi) = c2·f(w).
    Scalar fw = f.count(slot) ? f.at(slot) : Scalar(0);
    CHECK(reconstruct_psi(A, f, slot, c1, c2, A.unit()) == c1 * fw);
    CHECK(reconstruct_psi(A, f, slot, c1, c2, A.chi()) == c2 * fw);
  }
}
