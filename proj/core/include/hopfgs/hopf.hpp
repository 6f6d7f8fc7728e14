/**
 * @file hopf.hpp
 * @brief Hopf algebra descriptors over an enumerated (possibly degree-filtered) basis.
 *
 * Elements are sparse vectors over basis ids. Finite-dimensional algebras
 * enumerate their whole basis; filtered algebras (PBW quotients) enumerate all
 * standard monomials up to their truncation degree and raise DegreeOverflowError
 * instead of silently truncating products that leave the enumerated range.
 */
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfgs/linalg.hpp"
#include "hopfgs/scalar.hpp"

namespace hopfgs {

/// Sparse tensors over basis-id tuples.
using Tensor2 = std::map<std::pair<int, int>, Scalar>;
using Tensor3 = std::map<std::array<int, 3>, Scalar>;
using Tensor4 = std::map<std::array<int, 4>, Scalar>;

/// Raised when a product/coproduct would exceed the truncation degree.
class DegreeOverflowError : public std::runtime_error {
 public:
  explicit DegreeOverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a structure fails its validation (tables, axioms, budgets).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation would exceed the configured size budget.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

class HopfAlgebra {
 public:
  virtual ~HopfAlgebra() = default;

  virtual std::string name() const = 0;
  /// Number of enumerated basis elements (the full dimension when finite).
  virtual int dim() const = 0;
  virtual bool finite_dimensional() const = 0;
  /// Filtration degree of a basis element (0 for group-like bases).
  virtual int degree(int id) const = 0;
  virtual std::string basis_name(int id) const = 0;

  virtual SparseVec mult(int i, int j) const = 0;
  virtual SparseVec unit() const = 0;
  virtual Tensor2 comul(int i) const = 0;
  virtual Scalar counit(int i) const = 0;
  virtual SparseVec antipode(int i) const = 0;

  virtual bool has_haar() const { return false; }
  virtual Scalar haar(int /*id*/) const { throw ValidationError(name() + " has no Haar integral"); }
  virtual bool cosemisimple() const { return has_haar(); }

  /// Rational one-dimensional module structures (algebra maps A -> Q), given as
  /// value-per-basis-element vectors. Always contains at least the counit.
  virtual std::vector<std::vector<Scalar>> one_dim_modules() const;

  // -- element-level helpers ------------------------------------------------
  SparseVec mult(const SparseVec& x, const SparseVec& y) const;
  SparseVec mult(const SparseVec& x, int j) const;
  SparseVec mult(int i, const SparseVec& y) const;
  Tensor2 comul(const SparseVec& x) const;
  /// (Δ⊗id)Δ — three legs.
  Tensor3 comul2(int i) const;
  Tensor3 comul2(const SparseVec& x) const;
  /// (Δ⊗id⊗id)(Δ⊗id)Δ — four legs.
  Tensor4 comul3(int i) const;
  Scalar counit(const SparseVec& x) const;
  SparseVec antipode(const SparseVec& x) const;
  Scalar haar(const SparseVec& x) const;
  SparseVec scaled_unit(const Scalar& s) const;
  std::string element_str(const SparseVec& x) const;
};

/// Outcome of an exhaustive (degree-bounded) axiom verification.
struct AxiomReport {
  bool pass = true;
  int checked_degree = 0;
  std::vector<std::string> failures;  // witness descriptions, capped
};

/**
 * Verify associativity, unit laws, coassociativity, counit laws, Δ and ε being
 * algebra maps, both antipode axioms, antipode anti-multiplicativity, and (when
 * present) normalization + two-sided invariance of the Haar functional. For
 * filtered algebras, products are checked on tuples whose total degree fits the
 * bound so no check silently overflows.
 */
AxiomReport check_hopf_axioms(const HopfAlgebra& A, int max_degree);

/// S∘S = id on the basis up to max_degree; witness receives the first failure.
bool check_kac(const HopfAlgebra& A, int max_degree, std::string* witness = nullptr);

}  // namespace hopfgs
