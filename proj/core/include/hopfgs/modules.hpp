/**
 * @file modules.hpp
 * @brief Bimodules and right modules over a finite-dimensional Hopf algebra,
 *        given by exact action matrices per basis element.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfgs/hopf.hpp"

namespace hopfgs {

/// Right module: act[i] is the matrix of (- ← e_i) on column vectors.
struct RightModule {
  const HopfAlgebra* alg = nullptr;
  int dim = 0;
  std::string name;
  std::vector<SparseMatrix> act;

  SparseVec apply(const SparseVec& m, int alg_id) const;
  SparseVec apply(const SparseVec& m, const SparseVec& a) const;
};

/// Bimodule: left[i] and right[i] are the matrices of the two actions; the
/// composite convention is L(xy) = L(x)L(y) and R(xy) = R(y)R(x) on columns.
struct Bimodule {
  const HopfAlgebra* alg = nullptr;
  int dim = 0;
  std::string name;
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;

  SparseVec act_left(const SparseVec& a, const SparseVec& m) const;
  SparseVec act_right(const SparseVec& m, const SparseVec& a) const;
  RightModule right_part() const;
};

struct ModuleReport {
  bool pass = true;
  std::vector<std::string> failures;
};

ModuleReport check_right_module(const RightModule& M);
ModuleReport check_bimodule(const Bimodule& M);

RightModule trivial_right_module(const HopfAlgebra& A);
Bimodule trivial_bimodule(const HopfAlgebra& A);
Bimodule regular_bimodule(const HopfAlgebra& A);

/**
 * A seeded 2-dimensional bimodule: both actions are conjugates, by one random
 * integer matrix P with det ±1, of diagonal actions built from the algebra's
 * rational one-dimensional modules. The same P on both sides makes the two
 * actions commute for any choice of the four characters.
 */
Bimodule random_bimodule2(const HopfAlgebra& A, uint64_t seed);

}  // namespace hopfgs
