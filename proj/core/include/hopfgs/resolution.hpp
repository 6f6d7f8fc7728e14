/**
 * @file resolution.hpp
 * @brief The explicit length-3 relative resolution over B(E_q) ≅ O(SL_q(2))
 *        and the two induced four-term complexes (full algebra and even part).
 *
 * The resolution reads 0 → ℂ⊠A →^{φ₁} (V*⊗V)⊠A →^{φ₂} (V*⊗V)⊠A →^{φ₃}
 * ℂ⊠A →^{ε̂} ℂ → 0. Slots of V*⊗V are flattened as e_i*⊗e_j ↦ 2i+j.
 * Applying Hom(−, ℂ) and the coordinate identifications yields
 * four-term complexes with terms ℂ (full algebra, adjunction route) or
 * ℂ² (even subalgebra, coordinates ψ ↦ (ψ(−⊗1), ψ(−⊗χ))).
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "hopfgs/be_algebra.hpp"
#include "hopfgs/complex.hpp"
#include "hopfgs/comodule.hpp"

namespace hopfgs {

/// Evaluators for φ₁, φ₂, φ₃, ε̂ over a quantum-SL(2) instance of B(E).
struct ResolutionMaps {
  const BEAlgebra* alg = nullptr;

  /// φ₁(x) = Σ_s slot_s ⊗ coeff_s·x; returned per slot.
  std::array<SparseVec, 4> phi1(const SparseVec& x) const;
  /// φ₂(slot ⊗ x) per target slot.
  std::array<SparseVec, 4> phi2(int slot, const SparseVec& x) const;
  /// φ₃(slot ⊗ x) ∈ A.
  SparseVec phi3(int slot, const SparseVec& x) const;
  /// ε̂ = counit on ℂ⊠A.
  Scalar eps_hat(const SparseVec& x) const;
};

/// Build the evaluators; requires a 2×2 B(E) with the q parameter set.
ResolutionMaps resolution_maps(const BEAlgebra& A);

/**
 * Zero-composition (φ₂φ₁, φ₃φ₂, ε̂φ₃) and right-A-linearity certificates on
 * all slots × basis monomials of degree ≤ max_degree (linearity additionally
 * quantified over the four generators).
 */
struct ResolutionReport {
  bool pass = true;
  int compositions_checked = 0;
  int linearity_pairs = 0;
  std::vector<std::string> failures;
};
ResolutionReport check_resolution(const BEAlgebra& A, int max_degree);

/**
 * The invariant functional on V*⊗V (the unique colinear map V*⊗V → ℂ up to
 * scale), normalized so its value at slot e₁*⊗e₁ is 1 (fallback: first slot
 * with nonzero value). Keys 0..3. Throws ValidationError if the colinearity
 * solve does not return a one-dimensional space.
 */
SparseVec invariant_functional(const BEAlgebra& A);

/**
 * Four-term complex ℂ→ℂ→ℂ→ℂ computed from the resolution by the adjunction
 * Hom_YD(W⊠A, ℂ) ≅ Hom^A(W, ℂ), ψ ↦ ψ(−⊗1); differentials are the
 * transposes of φ₃, φ₂, φ₁ in the invariant-functional bases.
 * Requires q ≠ 0 and q + q⁻¹ ≠ 0.
 */
CochainComplex resolution_complex_sl2(const Scalar& q, int degree_bound = 6);

/**
 * Four-term complex ℂ²→ℂ²→ℂ²→ℂ² over the even subalgebra: each term uses the
 * coordinate pair ψ ↦ (ψ(−⊗1), ψ(−⊗χ)) with the reconstruction
 * ψ(w⊗(y+y′)) = ψ₁(w)ε(y) + (q+q⁻¹)⁻¹ψ₂(w)ε(y′) for y even, y′ odd.
 */
CochainComplex resolution_complex_psl2(const Scalar& q, int degree_bound = 6);

/**
 * Reconstructed evaluation ψ(w_slot ⊗ y) from the coordinate pair: ψᵢ = cᵢ·f
 * with f a functional on the slot space. Used for the even/odd bookkeeping
 * spot checks (e.g. ψ(w⊗b) = 0, ψ(w⊗d) = ψ(w⊗a)).
 */
Scalar reconstruct_psi(const BEAlgebra& A, const SparseVec& f, int slot, const Scalar& c1,
                       const Scalar& c2, const SparseVec& y);

}  // namespace hopfgs
