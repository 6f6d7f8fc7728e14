/**
 * @file linalg.hpp
 * @brief Sparse exact matrices over Q / Q(q): fraction-free elimination, rank,
 *        right null spaces, and deterministic JSON serialization.
 *
 * Elimination is Bareiss-style fraction-free with a pinned deterministic pivot
 * rule: columns are processed left to right and, among candidate rows, the one
 * with fewest nonzeros wins (ties by smallest row index). Rows are pre-scaled to
 * clear denominators, which keeps intermediate entries in the underlying ring.
 * Independent column-blocks are eliminated separately; this is semantically
 * invisible (same pivots, same rank, same normalized kernel).
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hopfgs/scalar.hpp"

namespace hopfgs {

/// Sparse vector: index -> nonzero scalar (absent means zero).
using SparseVec = std::map<int, Scalar>;

/// v += c * w
void axpy(SparseVec& v, const Scalar& c, const SparseVec& w);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Assign entry; erases on zero. Throws std::out_of_range on bad indices.
  void set(int r, int c, const Scalar& v);
  /// Add into entry.
  void add(int r, int c, const Scalar& v);
  Scalar get(int r, int c) const;
  const SparseVec& row(int r) const { return rows_data_[r]; }
  /// Number of stored nonzeros.
  long nnz() const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  bool operator==(const SparseMatrix& o) const;
  bool is_zero() const;

  /// Apply to a sparse column vector.
  SparseVec apply(const SparseVec& x) const;

  static SparseMatrix identity(int n);
  /// Matrix whose columns are the given sparse vectors.
  static SparseMatrix from_columns(const std::vector<SparseVec>& cols, int rows);

  /// JSON: {"rows":r,"cols":c,"entries":[[r,c,"scalar"],...]} sorted by (r,c).
  nlohmann::json to_json() const;
  static SparseMatrix from_json(const nlohmann::json& j);

  /// Entry-wise specialization q := point.
  SparseMatrix substitute_q(const Rational& point) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SparseVec> rows_data_;
};

/// Result of fraction-free elimination (row echelon data).
struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;  // strictly increasing, size == rank
};

int rank(const SparseMatrix& m);

/**
 * Basis of the right null space { x : m x = 0 }.
 *
 * Normalized against the elimination's pivot choice: there is exactly one basis
 * vector per free column f, carrying entry 1 at f and 0 at every other free
 * column. Vectors are ordered by increasing free column.
 */
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

/// rank + pivot columns in one pass.
Echelon eliminate(const SparseMatrix& m);

/**
 * Coordinates of vectors lying in the span of a kernel_basis()-normalized basis:
 * reads the entries at the free columns and verifies the reconstruction exactly.
 * Throws std::domain_error if v is not in the span.
 */
SparseVec coordinates_in_normalized_basis(const std::vector<SparseVec>& basis,
                                          const std::vector<int>& free_cols,
                                          const SparseVec& v);

/// The free columns (complement of pivots) matching kernel_basis ordering.
std::vector<int> free_columns(const SparseMatrix& m);

}  // namespace hopfgs
