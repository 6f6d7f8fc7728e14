/**
 * @file gs.hpp
 * @brief The GS cochain complex of a finite-dimensional cosemisimple Hopf
 *        algebra, the twisted Hochschild/Ext complex, the averaging operator,
 *        and the coordinate comparison between the two.
 *
 * Cochains f : A^{⊗n} → V are flattened with key v·|A|ⁿ + t, where t encodes
 * the source tuple mixed-radix (first factor most significant). Hochschild
 * cochains f : A^{⊗n} → M use key m·|A|ⁿ + t.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfgs/complex.hpp"
#include "hopfgs/yd.hpp"

namespace hopfgs {

/// A cochain complex together with the Hom-space bases of its terms,
/// so cochains can be moved between ambient and basis coordinates.
struct ComplexWithBases {
  CochainComplex complex;
  std::vector<HomSpaceBasis> terms;
};

/**
 * Ambient GS differential on all linear maps A^{⊗n} → V:
 * ∂(f)(a₁⊗⋯⊗a_{n+1}) = ε(a₁)f(a₂⊗⋯) + Σᵢ(−1)ⁱf(⋯aᵢa_{i+1}⋯)
 *                        + (−1)^{n+1}f(a₁⊗⋯⊗aₙ)←a_{n+1}.
 * Shape: dim(V)·|A|^{n+1} × dim(V)·|A|ⁿ.
 */
SparseMatrix gs_ambient_differential(const HopfAlgebra& A, const YDModule& V, int n);

/**
 * GS complex with terms Hom^A(A^{⊠n}, V), 0 ≤ n ≤ N+1, solved from the
 * colinearity constraint against the coadjoint coaction, and differentials
 * expressed in those bases.
 *
 * Throws ValidationError if A is not finite-dimensional cosemisimple or
 * N < 1, BudgetExceededError if |basis(A)|^{N+1} > budget.
 */
ComplexWithBases gs_complex(const HopfAlgebra& A, const YDModule& V, int N, long budget);

/**
 * Twisted Hochschild differential on maps A^{⊗n} → M:
 * D(f)(a₁⊗⋯⊗a_{n+1}) = ε(a₁)f(a₂⊗⋯) + Σᵢ(−1)ⁱf(⋯aᵢa_{i+1}⋯)
 *                        + (−1)^{n+1} S(a_{n+1(1)})·f(a₁⊗⋯⊗aₙ)·a_{n+1(2)}.
 */
SparseMatrix hochschild_differential(const HopfAlgebra& A, const Bimodule& M, int n);

/// Hochschild/Ext complex with unconstrained terms Hom(A^{⊗n}, M), 0 ≤ n ≤ N+1.
CochainComplex hochschild_complex(const HopfAlgebra& A, const Bimodule& M, int N);

/**
 * Contracting-homotopy certificate for the twisted Hochschild complex in
 * positive degrees: given a two-sided integral t with ε(t) = 1 (for group
 * algebras the average of the group elements; for function algebras δ_e),
 * the slice s(g) = g(t ⊗ −) satisfies sD + Ds = id on C¹..C^N.
 */
struct HomotopyReport {
  bool pass = true;
  int degrees_checked = 0;
  std::vector<std::string> failures;
};
HomotopyReport hochschild_homotopy_check(const HopfAlgebra& A, const Bimodule& M, int N,
                                         const SparseVec& integral);

/**
 * Averaging operator M(f)(v) = h(f(v₍₀₎)₍₁₎ S(v₍₁₎)) f(v₍₀₎)₍₀₎ on a linear
 * map f : X → W (matrix dim(W) × dim(X)), for X a comodule and W the comodule
 * underlying the coefficients; h is the Haar integral of the common algebra.
 */
SparseMatrix average_map(const Comodule& X, const Comodule& W, const SparseMatrix& f);

/// Same operator on a flattened cochain (key w·dim(X) + x).
SparseVec average_flat(const Comodule& X, const Comodule& W, const SparseVec& f);

/**
 * Averaging certificate for cochains A^{⊗n} → V: on `samples` seeded random
 * maps f, M(f) is colinear, M(M(f)) = M(f), ∂M(f) = M(∂f), and M(f) = f
 * exactly when f is colinear (both directions sampled).
 */
struct AveragingReport {
  bool pass = true;
  int cochains_tested = 0;
  std::vector<std::string> failures;
};
AveragingReport check_averaging(const HopfAlgebra& A, const YDModule& V, int n, int samples,
                                uint64_t seed);

/**
 * Degreewise comparison of the GS complex of M′#A with the twisted Hochschild
 * complex of M through Φ(f) = (id_M ⊗ ε)∘f: dimension agreement, Φ a
 * degreewise isomorphism (full rank), the commutation Φ∘∂ = D∘Φ for
 * 0 ≤ n ≤ N, and equal homology dimensions in degrees 0..N.
 */
struct EquivalenceReport {
  bool pass = true;
  std::vector<int> gs_dims, hoch_dims;
  std::vector<int> gs_homology, hoch_homology;
  std::vector<std::string> failures;
};
EquivalenceReport gs_equals_hochschild_check(const HopfAlgebra& A, const Bimodule& M, int N,
                                             long budget);

}  // namespace hopfgs
