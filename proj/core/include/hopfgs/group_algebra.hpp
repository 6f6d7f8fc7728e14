/**
 * @file group_algebra.hpp
 * @brief Finite groups from Cayley tables; group algebras and function algebras.
 */
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopfgs/hopf.hpp"

namespace hopfgs {

/// A finite group presented by its full multiplication table.
struct CayleyTable {
  std::string name;
  int order = 0;
  std::vector<std::string> elements;      // display names, size = order
  std::vector<std::vector<int>> table;    // table[i][j] = index of g_i * g_j
  int identity = -1;                      // filled by validate()
  std::vector<int> inverse;               // filled by validate()

  /// Full validation: shape, Latin square, two-sided identity, inverses,
  /// associativity. Throws ValidationError with a witness on failure.
  void validate();

  static CayleyTable cyclic(int n);
  /// Symmetric group on n points; element i is the i-th permutation of
  /// {0..n-1} in lexicographic one-line order, composition (s*t)(x) = s(t(x)).
  static CayleyTable symmetric(int n);
  /// Built-in groups by name: Z2, Z3, Z4, S3, S4.
  static CayleyTable builtin(const std::string& name);

  static CayleyTable from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Group algebra: basis g_i, Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹, h(g) = [g = e].
class GroupAlgebra : public HopfAlgebra {
 public:
  explicit GroupAlgebra(CayleyTable table);

  // Keep the element-level helper overloads visible next to the overrides.
  using HopfAlgebra::antipode;
  using HopfAlgebra::comul;
  using HopfAlgebra::counit;
  using HopfAlgebra::haar;
  using HopfAlgebra::mult;

  std::string name() const override { return "C[" + group_.name + "]"; }
  int dim() const override { return group_.order; }
  bool finite_dimensional() const override { return true; }
  int degree(int) const override { return 0; }
  std::string basis_name(int id) const override;
  SparseVec mult(int i, int j) const override;
  SparseVec unit() const override;
  Tensor2 comul(int i) const override;
  Scalar counit(int i) const override;
  SparseVec antipode(int i) const override;
  bool has_haar() const override { return true; }
  Scalar haar(int id) const override;
  std::vector<std::vector<Scalar>> one_dim_modules() const override;

  const CayleyTable& group() const { return group_; }

 private:
  CayleyTable group_;
};

/// Function algebra: basis δ_g, pointwise product, Δ(δ_g) = Σ_{xy=g} δ_x⊗δ_y,
/// ε(δ_g) = [g = e], S(δ_g) = δ_{g⁻¹}, h(δ_g) = 1/|Γ|.
class FunctionAlgebra : public HopfAlgebra {
 public:
  explicit FunctionAlgebra(CayleyTable table);

  // Keep the element-level helper overloads visible next to the overrides.
  using HopfAlgebra::antipode;
  using HopfAlgebra::comul;
  using HopfAlgebra::counit;
  using HopfAlgebra::haar;
  using HopfAlgebra::mult;

  std::string name() const override { return "O(" + group_.name + ")"; }
  int dim() const override { return group_.order; }
  bool finite_dimensional() const override { return true; }
  int degree(int) const override { return 0; }
  std::string basis_name(int id) const override;
  SparseVec mult(int i, int j) const override;
  SparseVec unit() const override;
  Tensor2 comul(int i) const override;
  Scalar counit(int i) const override;
  SparseVec antipode(int i) const override;
  bool has_haar() const override { return true; }
  Scalar haar(int id) const override;
  std::vector<std::vector<Scalar>> one_dim_modules() const override;

  const CayleyTable& group() const { return group_; }

 private:
  CayleyTable group_;
};

/// All group homomorphisms Γ -> {±1}; first entry is the trivial character.
std::vector<std::vector<int>> sign_characters(const CayleyTable& G);

}  // namespace hopfgs
