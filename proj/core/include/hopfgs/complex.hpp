/**
 * @file complex.hpp
 * @brief Finite cochain complexes of exact matrices and their homology.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgs/linalg.hpp"

namespace hopfgs {

/// A failed d∘d = 0 composition, with one nonzero witness entry.
struct CompositionFailure {
  int position = 0;  // d_{position+1} ∘ d_{position} != 0
  int row = 0, col = 0;
  std::string value;
};

/**
 * Bounded cochain complex C^0 -> C^1 -> ... -> C^k with differentials
 * d_i : C^i -> C^{i+1} given as matrices of shape dims[i+1] x dims[i].
 */
class CochainComplex {
 public:
  /// Validates shapes and d_{i+1} d_i = 0; throws std::domain_error on failure.
  CochainComplex(std::vector<int> dims, std::vector<SparseMatrix> differentials);

  /// Skip the d^2 validation (for fault-injection tests and the checker itself).
  static CochainComplex unchecked(std::vector<int> dims, std::vector<SparseMatrix> differentials);

  const std::vector<int>& dims() const { return dims_; }
  const std::vector<SparseMatrix>& differentials() const { return diffs_; }

  /// h_i = dim ker d_i - rank d_{i-1}, with d_k := 0 and d_{-1} := 0.
  std::vector<int> homology_dims() const;

  /// Ranks of the differentials d_0 .. d_{k-1}.
  std::vector<int> ranks() const;

  /// All failing consecutive compositions (empty means the complex is valid).
  std::vector<CompositionFailure> d_squared_check() const;

 private:
  CochainComplex() = default;
  void validate_shapes() const;
  std::vector<int> dims_;
  std::vector<SparseMatrix> diffs_;
};

}  // namespace hopfgs
