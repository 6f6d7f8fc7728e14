/**
 * @file be_algebra.hpp
 * @brief The universal cosovereign-type Hopf algebras B(E) presented by an
 *        invertible matrix E, truncated to a degree-bounded standard basis.
 *
 * Generators u_ij satisfy E⁻¹uᵗEu = I = uE⁻¹uᵗE, with Δ(u_ij) = Σ_k u_ik⊗u_kj,
 * ε(u_ij) = δ_ij, S(u) = E⁻¹uᵗE. For E_q = [[0,1],[-1/q,0]] this is the
 * coordinate algebra of quantum SL(2).
 */
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hopfgs/group_algebra.hpp"
#include "hopfgs/hopf.hpp"
#include "hopfgs/rewrite.hpp"

namespace hopfgs {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Exact inverse of a small dense matrix; throws ValidationError if singular.
ScalarMatrix invert_matrix(const ScalarMatrix& M);

/// The 2n² defining relations of B(E) as noncommutative polynomials in the
/// n² generators u_ij (generator index = n*i + j).
std::vector<NCPoly> derive_be_relations(const ScalarMatrix& E);

class BEAlgebra : public HopfAlgebra {
 public:
  BEAlgebra(ScalarMatrix E, int degree_bound, std::string display_name);

  // Keep the element-level helper overloads visible next to the overrides.
  using HopfAlgebra::antipode;
  using HopfAlgebra::comul;
  using HopfAlgebra::counit;
  using HopfAlgebra::haar;
  using HopfAlgebra::mult;

  /// B(E_q) with E_q = [[0,1],[-1/q,0]] and generators named a,b,c,d.
  static BEAlgebra quantum_sl2(const Scalar& q, int degree_bound);

  std::string name() const override { return display_name_; }
  int dim() const override { return static_cast<int>(basis_.size()); }
  bool finite_dimensional() const override { return false; }
  int degree(int id) const override { return static_cast<int>(basis_.at(id).size()); }
  std::string basis_name(int id) const override;
  SparseVec mult(int i, int j) const override;
  SparseVec unit() const override { return SparseVec{{0, Scalar(1)}}; }
  Tensor2 comul(int i) const override;
  Scalar counit(int i) const override;
  SparseVec antipode(int i) const override;

  int matrix_size() const { return n_; }
  int truncation_degree() const { return rewrite_->degree_bound(); }
  const RewriteSystem& rewrite() const { return *rewrite_; }
  const ScalarMatrix& E() const { return E_; }

  int generator_id(int i, int j) const;
  const Word& word_of(int id) const { return basis_.at(id); }
  int word_id(const Word& w) const;
  SparseVec to_element(const NCPoly& p) const;
  int parity(int id) const { return degree(id) % 2; }
  /// Split by total degree mod 2: x = even + odd, the even part lying in B₊.
  std::pair<SparseVec, SparseVec> parity_split(const SparseVec& x) const;
  std::vector<int> basis_up_to(int max_degree, std::optional<int> parity = std::nullopt) const;
  int dimension_in_degree(int d) const;

  // -- sovereign-character layer (needs tr(E(Eᵗ)⁻¹) invertible) --------------
  const ScalarMatrix& F() const { return F_; }
  Scalar trace_F() const { return trF_; }
  /// Cocentral projection p: B(E) -> C[Z2]; ids 0 = e, 1 = g.
  SparseVec cocentral_projection(int id) const;
  SparseVec cocentral_projection(const SparseVec& x) const;
  /// Section σ of p: σ(e) = 1, σ(g) = tr(F)⁻¹ Σ F_ij u_ij.
  SparseVec sigma(int z2_id) const;
  /// Cocentral grouplike-ish element χ = -Σ (F⁻¹)_ij u_ij.
  SparseVec chi() const;

  /// Set by quantum_sl2.
  std::optional<Scalar> q_param;

 private:
  int n_;
  std::string display_name_;
  ScalarMatrix E_, Einv_, F_, Finv_;
  Scalar trF_;
  std::optional<RewriteSystem> rewrite_;
  std::vector<Word> basis_;
  std::map<Word, int, DegLexLess> word_index_;
  std::vector<NCPoly> antipode_of_generator_;  // degree-1 images

  mutable std::map<std::pair<int, int>, SparseVec> mult_memo_;
  mutable std::map<int, Tensor2> comul_memo_;
  mutable std::map<int, SparseVec> antipode_memo_;
  // Guards the three memo maps; shared_ptr keeps the class copyable and movable.
  std::shared_ptr<std::mutex> memo_mutex_ = std::make_shared<std::mutex>();
};

/// Structural checks for p and σ: p is well defined on the completed rules,
/// p is cocentral ((p⊗id)Δ = (p⊗id)τΔ), pσ = id, σ intertwines the coproducts
/// through p, and σ(x)₍₁₎S(σ(x)₍₃₎)⊗σ(x)₍₂₎ = 1⊗σ(x).
struct SigmaReport {
  bool pass = true;
  std::vector<std::string> failures;
  int checked_degree = 0;
};
SigmaReport check_sigma(const BEAlgebra& A, int max_degree);

}  // namespace hopfgs
