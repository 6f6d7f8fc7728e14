/**
 * @file yd.hpp
 * @brief Yetter–Drinfeld modules: free V⊠A, cofree M#A, coadjoint powers,
 *        the bimodule twist M′#A, and the σ/ι/μ splitting machinery.
 *
 * Carriers are evaluators over enumerated bases; nothing infinite-dimensional
 * is materialized as a matrix.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hopfgs/be_algebra.hpp"
#include "hopfgs/comodule.hpp"
#include "hopfgs/modules.hpp"

namespace hopfgs {

/// Right-right Yetter–Drinfeld module with the compatibility law
/// (v ← a)₍₀₎ ⊗ (v ← a)₍₁₎ = v₍₀₎ ← a₍₂₎ ⊗ S(a₍₁₎)v₍₁₎a₍₃₎.
struct YDModule {
  const HopfAlgebra* alg = nullptr;
  int dim = 0;
  std::string name;
  std::function<std::vector<std::pair<int, SparseVec>>(int)> coaction;
  /// act(v, a): image of carrier basis vector v under (- ← e_a).
  std::function<SparseVec(int, int)> act;

  Comodule as_comodule() const;
  SparseVec act_element(const SparseVec& v, const SparseVec& a) const;
};

/// Trivial YD module ℂ = A^{⊠0}.
YDModule trivial_yd(const HopfAlgebra& A);
/// Free YD module V⊠A: action by right multiplication, coaction
/// v⊗a ↦ v₍₀₎⊗a₍₂₎ ⊗ S(a₍₁₎)v₍₁₎a₍₃₎. Carrier index = v*dim(A)+a.
YDModule free_yd(const Comodule& V);
/// Cofree YD module M#A: coaction id⊗Δ, action (x⊗a)←b = x·b₍₂₎ ⊗ S(b₍₁₎)ab₍₃₎.
YDModule cofree_yd(const RightModule& M);
/// A_ad = ℂ_ε#A.
YDModule adjoint_yd(const HopfAlgebra& A);
/// Coadjoint power A^{⊠n}: right multiplication on the last leg, coaction
/// (a₁⊗…⊗aₙ) ↦ (a₁₍₂₎⊗…⊗aₙ₍₂₎) ⊗ S(a₁₍₁₎⋯aₙ₍₁₎)a₁₍₃₎⋯aₙ₍₃₎.
YDModule coad_power(const HopfAlgebra& A, int n);
/// M′#A for a bimodule M: coaction id⊗Δ, action
/// (m⊗a)←b = S(b₍₂₎)·m·b₍₃₎ ⊗ S(b₍₁₎)ab₍₄₎. Finite-dimensional A only.
YDModule twist_bimodule(const Bimodule& M);

struct YDReport {
  bool pass = true;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};

/**
 * Check unit action, action associativity, comodule laws, and the YD
 * compatibility law on carrier_ids × (algebra basis of degree ≤ algebra_degree,
 * degree-compatible pairs for associativity).
 */
YDReport check_yd(const YDModule& V, const std::vector<int>& carrier_ids, int algebra_degree);

/// Convenience: all carriers (finite case) of a finite-dimensional algebra.
YDReport check_yd_full(const YDModule& V);

/// Is T (dim(Y) × dim(X)) a morphism of YD modules on the given carriers?
bool is_yd_morphism(const YDModule& X, const YDModule& Y, const SparseMatrix& T,
                    const std::vector<int>& carrier_ids, int algebra_degree,
                    std::string* witness = nullptr);

/// Prop.-style restriction check: Σ a₍₂₎ ⊗ S(a₍₁₎)ba₍₃₎ has no odd part in the
/// second leg, for basis a of degree ≤ deg_a and even basis b of degree ≤ deg_b.
struct AdjointRestrictionReport {
  bool pass = true;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};
AdjointRestrictionReport adjoint_restriction_check(const BEAlgebra& A, int deg_a, int deg_b);

/**
 * The ι/μ splitting of W⊠A over B₊ through σp:
 * ι(w⊗a) = w ⊗ σp(a₍₁₎)₍₁₎ ⊗ S(σp(a₍₁₎)₍₂₎)a₍₂₎, μ(w⊗x⊗y) = w⊗xy.
 * Verifies μι = id on all carrier pairs of degree ≤ max_degree, that ι's last
 * leg is even, ι(w⊗1) = w⊗1⊗1, right B₊-linearity on seeded samples, and —
 * when W itself is a B₊-comodule — B₊-colinearity of ι on seeded samples
 * (colinearity_samples stays 0 for a W with odd coaction legs).
 */
struct IotaMuReport {
  bool pass = true;
  int pairs_checked = 0;
  int colinearity_samples = 0;
  std::vector<std::string> failures;
};
IotaMuReport check_iota_mu(const BEAlgebra& A, const Comodule& W, int max_degree, uint64_t seed);

}  // namespace hopfgs
