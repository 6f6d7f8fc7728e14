#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hopfgs/measured.hpp"

using namespace hopfgs;

TEST_CASE("frobenius dual tensors") {
  // (C^2, phi = (1,1)): identity Gram.
  MeasuredAlgebra R2 = MeasuredAlgebra::cn(2);
  Tensor2 d2 = frobenius_dual(R2);
  CHECK(d2 == Tensor2{{{0, 0}, Scalar(1)}, {{1, 1}, Scalar(1)}});

  // Weights (1,2): invert diag(1,2).
  MeasuredAlgebra Rw = MeasuredAlgebra::cn_weighted({Scalar(1), Scalar(2)});
  Tensor2 dw = frobenius_dual(Rw);
  CHECK(dw == Tensor2{{{0, 0}, Scalar(1)}, {{1, 1}, Scalar::ratio(1, 2)}});

  // (M2(C), trace) on matrix units e11,e12,e21,e22: the dual pairs each unit
  // with its transpose. Snake identities are verified inside the call.
  Tensor2 dm = frobenius_dual(MeasuredAlgebra::m2_trace());
  Tensor2 expect{{{0, 0}, Scalar(1)},
                 {{1, 2}, Scalar(1)},
                 {{2, 1}, Scalar(1)},
                 {{3, 3}, Scalar(1)}};
  CHECK(dm == expect);
}

TEST_CASE("phi tilde") {
  std::vector<Scalar> t4 = phi_tilde(MeasuredAlgebra::cn(4));
  CHECK(t4 == std::vector<Scalar>{Scalar(1), Scalar(1), Scalar(1), Scalar(1)});

  std::vector<Scalar> tw = phi_tilde(MeasuredAlgebra::cn_weighted({Scalar(1), Scalar(2)}));
  CHECK(tw == std::vector<Scalar>{Scalar(1), Scalar(1)});

  // One-dimensional R = C with phi(1) = 3: delta(1) = (1/3)*(1 (x) 1), so
  // phi~(1) = (1/3)*phi(1) = 1 and phi~ = (1/3)*phi.
  std::vector<Scalar> t1 = phi_tilde(MeasuredAlgebra::cn_weighted({Scalar(3)}));
  CHECK(t1 == std::vector<Scalar>{Scalar(1)});
}

TEST_CASE("normalizability of the coordinate algebras") {
  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    NormalizabilityReport rep = normalizability(MeasuredAlgebra::cn(n));
    CHECK(rep.normalizable);
    CHECK(rep.lambda == Scalar(1));
    CHECK(rep.phi1 == Scalar(n));
    CHECK(rep.mu_squared == Scalar(n));
  }
  // n = 4: mu = 2, q = 1. n = 9: mu = 3 but z^2 - 3z + 1 has no rational root.
  NormalizabilityReport r4 = normalizability(MeasuredAlgebra::cn(4));
  REQUIRE(r4.mu.has_value());
  CHECK(*r4.mu == Scalar(2));
  REQUIRE(r4.q.has_value());
  CHECK(*r4.q == Scalar(1));

  NormalizabilityReport r9 = normalizability(MeasuredAlgebra::cn(9));
  REQUIRE(r9.mu.has_value());
  CHECK(*r9.mu == Scalar(3));
  CHECK(!r9.q.has_value());

  // n = 5: mu^2 = 5 is not a perfect square; only the quadratic data remains.
  CHECK(!normalizability(MeasuredAlgebra::cn(5)).mu.has_value());
}

TEST_CASE("weighted measure is not normalizable") {
  NormalizabilityReport rep =
      normalizability(MeasuredAlgebra::cn_weighted({Scalar(1), Scalar(2)}));
  CHECK(!rep.normalizable);
  CHECK(rep.witness_index == 1);
  CHECK(rep.reason == "phi~ is not proportional to phi");
}

TEST_CASE("matrix algebras with trace measures") {
  NormalizabilityReport tr = normalizability(MeasuredAlgebra::m2_trace());
  CHECK(tr.normalizable);
  CHECK(tr.lambda == Scalar(2));
  CHECK(tr.phi1 == Scalar(2));
  CHECK(tr.mu_squared == Scalar(4));
  REQUIRE(tr.q.has_value());
  CHECK(*tr.q == Scalar(1));

  Scalar q(2);
  NormalizabilityReport trq = normalizability(MeasuredAlgebra::m2_trace_q(q));
  Scalar m = q + Scalar(1) / q;
  CHECK(trq.normalizable);
  CHECK(trq.lambda == m);
  CHECK(trq.phi1 == m);
  CHECK(trq.mu_squared == m * m);
  REQUIRE(trq.mu.has_value());
  CHECK(*trq.mu == m);
  REQUIRE(trq.q.has_value());
  CHECK(*trq.q == Scalar(2));  // the root with |q| >= 1

  // tr_q at q = 3: mu = 10/3, roots 3 and 1/3.
  NormalizabilityReport tr3 = normalizability(MeasuredAlgebra::m2_trace_q(Scalar(3)));
  REQUIRE(tr3.q.has_value());
  CHECK(*tr3.q == Scalar(3));
}

TEST_CASE("edge cases") {
  // phi(1) = 0 reported, not thrown.
  NormalizabilityReport rep =
      normalizability(MeasuredAlgebra::cn_weighted({Scalar(1), Scalar(-1)}));
  CHECK(!rep.normalizable);
  CHECK(rep.reason == "phi(1) = 0");

  // Degenerate Gram matrix is a hard error for the dual tensor.
  CHECK_THROWS_AS(gram_matrix(MeasuredAlgebra::cn_weighted({Scalar(1), Scalar(0)})),
                  ValidationError);
  CHECK_THROWS_AS(frobenius_dual(MeasuredAlgebra::cn_weighted({Scalar(1), Scalar(0)})),
                  ValidationError);

  // Corrupting the structure constants breaks validate().
  MeasuredAlgebra bad = MeasuredAlgebra::cn(2);
  bad.mult[0][0] = SparseVec{};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("change of basis leaves the functional data invariant") {
  MeasuredAlgebra R = MeasuredAlgebra::m2_trace_q(Scalar(2));
  ScalarMatrix P{{Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
                 {Scalar(0), Scalar(1), Scalar(0), Scalar(2)},
                 {Scalar(0), Scalar(0), Scalar(1), Scalar(1)},
                 {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}};
  MeasuredAlgebra Rb = change_of_basis(R, P);
  Rb.validate();

  // phi~ transforms as a covector: phi~_new[i] = sum_k P[k][i] phi~_old[k].
  std::vector<Scalar> told = phi_tilde(R);
  std::vector<Scalar> tnew = phi_tilde(Rb);
  for (int i = 0; i < 4; ++i) {
    Scalar expect(0);
    for (int k = 0; k < 4; ++k) expect += P[static_cast<size_t>(k)][static_cast<size_t>(i)] * told[static_cast<size_t>(k)];
    CHECK(tnew[static_cast<size_t>(i)] == expect);
  }

  NormalizabilityReport a = normalizability(R);
  NormalizabilityReport b = normalizability(Rb);
  CHECK(a.normalizable == b.normalizable);
  CHECK(a.lambda == b.lambda);
  CHECK(a.mu_squared == b.mu_squared);

  ScalarMatrix singular{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}};
  CHECK_THROWS_AS(change_of_basis(MeasuredAlgebra::cn(2), singular), ValidationError);
}

TEST_CASE("json round trip") {
  MeasuredAlgebra R = MeasuredAlgebra::m2_trace_q(Scalar(2));
  nlohmann::json j = R.to_json();
  CHECK(j["dim"] == 4);
  MeasuredAlgebra back = MeasuredAlgebra::from_json(j);
  back.validate();
  CHECK(back.dim == R.dim);
  CHECK(back.phi == R.phi);
  CHECK(back.to_json().dump() == j.dump());
  CHECK(normalizability(back).mu_squared == Scalar::ratio(25, 4));
}
