/**
 * @file measured.hpp
 * @brief Finite-dimensional measured algebras (R, φ): Frobenius dual tensor,
 *        the functional φ̃, the normalizability test, and extraction of the
 *        monoidal parameter through μ² = λ·φ(1) and z² − μz + 1.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hopfgs/be_algebra.hpp"  // ScalarMatrix, invert_matrix
#include "hopfgs/linalg.hpp"

namespace hopfgs {

/// A finite-dimensional unital algebra with a linear measure φ.
struct MeasuredAlgebra {
  std::string name;
  int dim = 0;
  /// mult[i][j] = bᵢ·bⱼ expanded over the basis.
  std::vector<std::vector<SparseVec>> mult;
  SparseVec unit;
  std::vector<Scalar> phi;

  SparseVec product(const SparseVec& x, const SparseVec& y) const;
  Scalar measure(const SparseVec& x) const;

  /// Associativity, unit laws, and shape; throws ValidationError on failure.
  void validate() const;

  /// (ℂⁿ, φₙ): coordinatewise algebra with φ = sum of coordinates.
  static MeasuredAlgebra cn(int n);
  /// ℂⁿ with weights: φ(eᵢ) = wᵢ.
  static MeasuredAlgebra cn_weighted(const std::vector<Scalar>& weights);
  /// (M₂(ℂ), tr) on the matrix units e₁₁,e₁₂,e₂₁,e₂₂.
  static MeasuredAlgebra m2_trace();
  /// (M₂(ℂ), tr_q) with tr_q(g) = q·g₁₁ + q⁻¹·g₂₂.
  static MeasuredAlgebra m2_trace_q(const Scalar& q);

  /// JSON: {"dim": m, "mult": [m][m][m] scalars, "unit": [m], "phi": [m]}.
  nlohmann::json to_json() const;
  static MeasuredAlgebra from_json(const nlohmann::json& j);
};

/// Gram matrix G_{ij} = φ(bᵢbⱼ); throws ValidationError if degenerate.
ScalarMatrix gram_matrix(const MeasuredAlgebra& R);

/**
 * Frobenius dual tensor δ(1) = Σ_{ij} (G⁻¹)_{ij} bᵢ⊗bⱼ, with both snake
 * identities ((φ∘m)⊗id)(id⊗δ) = id = (id⊗(φ∘m))(δ⊗id) verified on the basis
 * (throws ValidationError if either fails).
 */
Tensor2 frobenius_dual(const MeasuredAlgebra& R);

/// φ̃ = φ∘m∘(m⊗id)∘(id⊗δ) evaluated on the basis.
std::vector<Scalar> phi_tilde(const MeasuredAlgebra& R);

/**
 * Change of basis: columns of P are the new basis vectors in old coordinates.
 * The measure is pulled back; throws ValidationError if P is singular.
 */
MeasuredAlgebra change_of_basis(const MeasuredAlgebra& R, const ScalarMatrix& P);

struct NormalizabilityReport {
  bool normalizable = false;
  std::string reason;       // set when not normalizable
  int witness_index = -1;   // basis index where proportionality fails
  Scalar phi1;              // φ(1)
  Scalar lambda;            // φ̃ = λφ (when normalizable)
  Scalar mu_squared;        // μ² = λ·φ(1)
  std::optional<Scalar> mu; // only when μ² is a perfect rational square
  std::optional<Scalar> q;  // rational root of z² − μz + 1 with |q| ≥ 1, if any
};

/**
 * Normalizability per the rule: φ(1) ≠ 0 and φ̃ = λφ for some λ ≠ 0;
 * then μ² = λ·φ(1), and q solves q + q⁻¹ = μ. μ and q are reported only when
 * they exist as exact rationals (positive root preferred for q).
 */
NormalizabilityReport normalizability(const MeasuredAlgebra& R);

}  // namespace hopfgs
