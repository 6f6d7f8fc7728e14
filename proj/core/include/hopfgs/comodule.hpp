/**
 * @file comodule.hpp
 * @brief Right comodules over a Hopf algebra descriptor and exact computation
 *        of colinear Hom spaces.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfgs/hopf.hpp"

namespace hopfgs {

/**
 * A right comodule: α(e_j) = Σ_i e_i ⊗ c_ij with c_ij ∈ A. The coaction
 * callback returns, for column j, the list of (i, c_ij) with c_ij ≠ 0.
 */
struct Comodule {
  const HopfAlgebra* alg = nullptr;
  int dim = 0;
  std::string name;
  std::function<std::vector<std::pair<int, SparseVec>>(int)> coaction;
};

struct ComoduleReport {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Counit law (ε on the legs gives the identity) and the matrix-coaction
/// coassociativity Δ(c_ij) = Σ_k c_ik ⊗ c_kj.
ComoduleReport check_comodule(const Comodule& V);

Comodule trivial_comodule(const HopfAlgebra& A);
/// Column comodule of the defining matrix: α(e_j) = Σ_i e_i ⊗ u_ij.
class BEAlgebra;
Comodule fundamental_comodule(const BEAlgebra& A);
/// Dual matrix comodule: c*_ij = S(c_ji).
Comodule dual_comodule(const Comodule& V);
/// Tensor product with entrywise products: c_(i,j),(k,l) = c^V_ik · c^W_jl;
/// pair (i,j) is flattened to i*dim(W)+j.
Comodule tensor_comodule(const Comodule& V, const Comodule& W);
/// A^{⊗n} with the codiagonal coaction (tuples flattened mixed-radix,
/// last factor fastest). n = 0 gives the trivial comodule.
Comodule tensor_power_comodule(const HopfAlgebra& A, int n);

/**
 * A basis of the space of colinear maps V -> W, stored as flattened matrices
 * (key k*dim(V)+j for the (k,j) entry). Vectors come from the normalized
 * kernel basis, so each has entry 1 at "its" free column and entry 0 at the
 * free columns of the others; coordinates() exploits that and then verifies
 * the reconstruction exactly.
 */
struct HomSpaceBasis {
  int source_dim = 0;
  int target_dim = 0;
  std::string description;
  std::vector<SparseVec> vectors;
  std::vector<int> free_cols;

  int dim() const { return static_cast<int>(vectors.size()); }
  SparseMatrix matrix(int index) const;
  SparseVec flatten(const SparseMatrix& f) const;
  SparseVec coordinates(const SparseVec& flat) const;  // throws if not in span
};

/// Solve the colinearity equations α_W(f v) = (f⊗id)α_V(v) exactly.
HomSpaceBasis colinear_hom(const Comodule& V, const Comodule& W);

/// Is the given target_dim × source_dim matrix colinear V -> W?
bool is_colinear(const Comodule& V, const Comodule& W, const SparseMatrix& f,
                 std::string* witness = nullptr);

}  // namespace hopfgs
