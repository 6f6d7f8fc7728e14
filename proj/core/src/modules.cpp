/**
 * @file modules.cpp
 * @brief Module constructors and law checkers.
 */
#include "hopfgs/modules.hpp"

#include <random>

namespace hopfgs {

SparseVec RightModule::apply(const SparseVec& m, int alg_id) const {
  return act.at(static_cast<size_t>(alg_id)).apply(m);
}

SparseVec RightModule::apply(const SparseVec& m, const SparseVec& a) const {
  SparseVec out;
  for (const auto& [i, c] : a) axpy(out, c, apply(m, i));
  return out;
}

SparseVec Bimodule::act_left(const SparseVec& a, const SparseVec& m) const {
  SparseVec out;
  for (const auto& [i, c] : a) axpy(out, c, left.at(static_cast<size_t>(i)).apply(m));
  return out;
}

SparseVec Bimodule::act_right(const SparseVec& m, const SparseVec& a) const {
  SparseVec out;
  for (const auto& [i, c] : a) axpy(out, c, right.at(static_cast<size_t>(i)).apply(m));
  return out;
}

RightModule Bimodule::right_part() const {
  RightModule M;
  M.alg = alg;
  M.dim = dim;
  M.name = name + "|right";
  M.act = right;
  return M;
}

namespace {

SparseMatrix action_of(const std::vector<SparseMatrix>& mats, const SparseVec& a, int dim) {
  SparseMatrix out(dim, dim);
  for (const auto& [i, c] : a)
    for (int r = 0; r < dim; ++r)
      for (const auto& [col, v] : mats.at(static_cast<size_t>(i)).row(r)) out.add(r, col, c * v);
  return out;
}

void check_unital(const HopfAlgebra& A, const std::vector<SparseMatrix>& mats, int dim,
                  const std::string& side, ModuleReport& rep) {
  SparseMatrix one = action_of(mats, A.unit(), dim);
  if (one != SparseMatrix::identity(dim)) {
    rep.pass = false;
    rep.failures.push_back(side + " action of 1 is not the identity");
  }
}

}  // namespace

ModuleReport check_right_module(const RightModule& M) {
  ModuleReport rep;
  const HopfAlgebra& A = *M.alg;
  if (static_cast<int>(M.act.size()) != A.dim()) {
    rep.pass = false;
    rep.failures.push_back("action table size != algebra dimension");
    return rep;
  }
  check_unital(A, M.act, M.dim, "right", rep);
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      // m ← (e_i e_j) applied as R(e_j)∘R(e_i) must match the product action.
      SparseMatrix composite = M.act[static_cast<size_t>(j)] * M.act[static_cast<size_t>(i)];
      SparseMatrix direct = action_of(M.act, A.mult(i, j), M.dim);
      if (composite != direct) {
        rep.pass = false;
        if (rep.failures.size() < 8)
          rep.failures.push_back("right associativity fails at (" + A.basis_name(i) + "," +
                                 A.basis_name(j) + ")");
      }
    }
  return rep;
}

ModuleReport check_bimodule(const Bimodule& M) {
  ModuleReport rep;
  const HopfAlgebra& A = *M.alg;
  if (static_cast<int>(M.left.size()) != A.dim() ||
      static_cast<int>(M.right.size()) != A.dim()) {
    rep.pass = false;
    rep.failures.push_back("action table size != algebra dimension");
    return rep;
  }
  check_unital(A, M.left, M.dim, "left", rep);
  check_unital(A, M.right, M.dim, "right", rep);
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      SparseMatrix lcomp = M.left[static_cast<size_t>(i)] * M.left[static_cast<size_t>(j)];
      if (lcomp != action_of(M.left, A.mult(i, j), M.dim)) {
        rep.pass = false;
        if (rep.failures.size() < 8)
          rep.failures.push_back("left associativity fails at (" + A.basis_name(i) + "," +
                                 A.basis_name(j) + ")");
      }
      SparseMatrix rcomp = M.right[static_cast<size_t>(j)] * M.right[static_cast<size_t>(i)];
      if (rcomp != action_of(M.right, A.mult(i, j), M.dim)) {
        rep.pass = false;
        if (rep.failures.size() < 8)
          rep.failures.push_back("right associativity fails at (" + A.basis_name(i) + "," +
                                 A.basis_name(j) + ")");
      }
      SparseMatrix lr = M.left[static_cast<size_t>(i)] * M.right[static_cast<size_t>(j)];
      SparseMatrix rl = M.right[static_cast<size_t>(j)] * M.left[static_cast<size_t>(i)];
      if (lr != rl) {
        rep.pass = false;
        if (rep.failures.size() < 8)
          rep.failures.push_back("left/right actions do not commute at (" + A.basis_name(i) +
                                 "," + A.basis_name(j) + ")");
      }
    }
  return rep;
}

RightModule trivial_right_module(const HopfAlgebra& A) {
  RightModule M;
  M.alg = &A;
  M.dim = 1;
  M.name = "C_eps";
  for (int i = 0; i < A.dim(); ++i) {
    SparseMatrix m(1, 1);
    m.set(0, 0, A.counit(i));
    M.act.push_back(std::move(m));
  }
  return M;
}

Bimodule trivial_bimodule(const HopfAlgebra& A) {
  Bimodule M;
  M.alg = &A;
  M.dim = 1;
  M.name = "C_eps";
  for (int i = 0; i < A.dim(); ++i) {
    SparseMatrix m(1, 1);
    m.set(0, 0, A.counit(i));
    M.left.push_back(m);
    M.right.push_back(m);
  }
  return M;
}

Bimodule regular_bimodule(const HopfAlgebra& A) {
  Bimodule M;
  M.alg = &A;
  M.dim = A.dim();
  M.name = "regular";
  for (int i = 0; i < A.dim(); ++i) {
    SparseMatrix L(M.dim, M.dim), R(M.dim, M.dim);
    for (int j = 0; j < A.dim(); ++j) {
      for (const auto& [k, c] : A.mult(i, j)) L.set(k, j, c);
      for (const auto& [k, c] : A.mult(j, i)) R.set(k, j, c);
    }
    M.left.push_back(std::move(L));
    M.right.push_back(std::move(R));
  }
  return M;
}

Bimodule random_bimodule2(const HopfAlgebra& A, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto chars = A.one_dim_modules();
  const size_t nc = chars.size();
  auto pick = [&rng, nc]() { return static_cast<size_t>(rng() % nc); };
  const auto& l1 = chars[pick()];
  const auto& l2 = chars[pick()];
  const auto& r1 = chars[pick()];
  const auto& r2 = chars[pick()];

  // P = [[1, s],[t, 1+s*t]] has determinant 1 for any integers s, t.
  long s = static_cast<long>(rng() % 7) - 3;
  long t = static_cast<long>(rng() % 7) - 3;
  Scalar p00(1), p01(static_cast<int>(s)), p10(static_cast<int>(t)),
      p11(Rational(1 + s * t));
  // P^{-1} = [[1+s*t, -s],[-t, 1]].
  Scalar i00 = p11, i01 = Scalar(0) - p01, i10 = Scalar(0) - p10, i11 = Scalar(1);

  auto conj_diag = [&](const Scalar& d1, const Scalar& d2) {
    SparseMatrix m(2, 2);
    m.set(0, 0, p00 * d1 * i00 + p01 * d2 * i10);
    m.set(0, 1, p00 * d1 * i01 + p01 * d2 * i11);
    m.set(1, 0, p10 * d1 * i00 + p11 * d2 * i10);
    m.set(1, 1, p10 * d1 * i01 + p11 * d2 * i11);
    return m;
  };

  Bimodule M;
  M.alg = &A;
  M.dim = 2;
  M.name = "random2(seed=" + std::to_string(seed) + ")";
  for (int i = 0; i < A.dim(); ++i) {
    M.left.push_back(conj_diag(l1[static_cast<size_t>(i)], l2[static_cast<size_t>(i)]));
    M.right.push_back(conj_diag(r1[static_cast<size_t>(i)], r2[static_cast<size_t>(i)]));
  }
  return M;
}

}  // namespace hopfgs
