/**
 * @file presentations.hpp
 * @brief Presentations of the quantum permutation algebra A_s(n) and the
 *        hyperoctahedral algebra A_h(n), with mechanical checks of the
 *        O(S_n) quotient and of the maps i, pi between them.
 */
#pragma once

#include <string>
#include <vector>

#include "hopfgs/rewrite.hpp"

namespace hopfgs {

/**
 * A finitely presented algebra: named generators and a list of defining
 * relations, each stored as a noncommutative polynomial understood to be 0.
 */
struct Presentation {
  std::string algebra_name;
  int n = 0;                       ///< matrix size; generator (i,j) has id n*i + j
  std::vector<std::string> names;  ///< generator names, length n*n
  std::vector<NCPoly> relations;
};

/**
 * A_s(n): generators x_ij (0-based indices printed 1-based), relations
 *   sum_l x_li = 1 = sum_l x_il,
 *   x_ik x_ij = delta_kj x_ij,   x_ki x_ji = delta_kj x_ji.
 * Throws ValidationError if n < 2.
 */
Presentation as_presentation(int n);

/**
 * A_h(n): generators a_ij, relations
 *   sum_l a_li^2 = 1 = sum_l a_il^2,
 *   a_ik a_ij = 0 = a_ji a_ki   for j != k.
 * Throws ValidationError if n < 2.
 */
Presentation ah_presentation(int n);

/**
 * Row-reduced span of noncommutative polynomials, used to certify that an
 * element lies in a given degree-truncated slice of a two-sided ideal.
 * Rows are kept in echelon form keyed by their deglex-leading word.
 */
class NCSpan {
 public:
  /// Reduces p against the stored rows and inserts the residual if nonzero.
  void insert(NCPoly p);
  /// True iff p reduces to 0 against the stored rows (i.e. p lies in the span).
  bool contains(NCPoly p) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  NCPoly reduce(NCPoly p) const;
  // Leading word -> monic row with that leading word.
  std::map<Word, NCPoly, DegLexLess> rows_;
};

/**
 * Span of { u * r * v : r a defining relation, |u| + deg(r) + |v| <= max_degree },
 * i.e. the degree-<=max_degree slice of the two-sided ideal that is reachable
 * with one-sided padding. Membership in this span certifies ideal membership.
 */
NCSpan ideal_slice(const Presentation& P, int max_degree);

/// Report for presentation_check_As_Ah.
struct PresentationReport {
  bool pass = false;
  int n = 0;
  int quotient_relations_checked = 0;  ///< A_s relations evaluated in O(S_n)
  int i_relations_checked = 0;         ///< A_s relations pushed through i into ideal(A_h)
  int pi_relations_checked = 0;        ///< A_h relations pushed through pi into ideal(A_s)
  int pi_i_generators_checked = 0;     ///< pi(i(x_ij)) = x_ij modulo ideal(A_s)
  std::vector<std::string> failures;
};

/**
 * Verifies, for the pair A_s(n), A_h(n):
 *  (i)  the quotient A_s(n) -> O(S_n), x_ij -> indicator of {s : s(j) = i},
 *       kills every defining relation (evaluated pointwise on all n!
 *       permutations);
 *  (ii) i: A_s(n) -> A_h(n), x_ij -> a_ij^2, and pi: A_h(n) -> A_s(n),
 *       a_ij -> x_ij, send defining relations into the target's defining
 *       ideal (certified by exact span membership), and pi(i(x_ij)) = x_ij
 *       holds modulo the relations of A_s(n) for every generator.
 * Throws ValidationError if n < 2.
 */
PresentationReport presentation_check_As_Ah(int n);

}  // namespace hopfgs
