/**
 * @file rewrite.hpp
 * @brief Noncommutative rewriting: deglex orientation, bounded completion,
 *        normal forms, and standard-monomial enumeration.
 */
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfgs/scalar.hpp"

namespace hopfgs {

/// A word in the free monoid on generators 0..n-1.
using Word = std::vector<int>;

/// Degree-lexicographic order: shorter words first, ties broken left-to-right
/// by generator index.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative polynomial: finitely many words with nonzero coefficients.
using NCPoly = std::map<Word, Scalar, DegLexLess>;

void nc_add_scaled(NCPoly& acc, const Scalar& c, const NCPoly& p);
NCPoly nc_concat(const NCPoly& p, const NCPoly& q);
std::string word_str(const Word& w, const std::vector<std::string>& names);
std::string nc_poly_str(const NCPoly& p, const std::vector<std::string>& names);

/// Oriented rule lhs -> rhs with every rhs word deglex-smaller than lhs.
struct RewriteRule {
  Word lhs;
  NCPoly rhs;
};

/**
 * A rewriting system obtained by orienting the given relations (= 0) along
 * deglex and completing by overlap resolution. Completion adds a rule for
 * every unresolvable overlap whose ambiguity word fits within degree_bound, so
 * normal forms are canonical for all words up to that degree.
 */
class RewriteSystem {
 public:
  RewriteSystem(std::vector<std::string> generator_names, std::vector<NCPoly> relations,
                int degree_bound, int rule_budget = 512);

  int generators() const { return static_cast<int>(names_.size()); }
  int degree_bound() const { return degree_bound_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  bool is_normal_word(const Word& w) const;
  /// Full normal form; throws DegreeOverflowError for words beyond the bound.
  NCPoly normal_form(const Word& w) const;
  NCPoly normal_form(const NCPoly& p) const;

  /// All irreducible words of degree <= max_degree, in deglex order.
  std::vector<Word> normal_words(int max_degree) const;

  struct ConfluenceReport {
    bool confluent = true;
    int checked_degree = 0;
    int overlaps_checked = 0;
    std::vector<std::string> issues;
  };
  /// Re-verifies all overlap ambiguities up to the given degree from scratch.
  ConfluenceReport check_confluence(int up_to_degree) const;

  std::string word_str(const Word& w) const { return hopfgs::word_str(w, names_); }
  std::string poly_str(const NCPoly& p) const { return hopfgs::nc_poly_str(p, names_); }

 private:
  NCPoly reduce_word(const Word& w) const;
  int first_match(const Word& w, int* rule_index) const;  // position or -1

  std::vector<std::string> names_;
  int degree_bound_;
  std::vector<RewriteRule> rules_;

  struct WordHash {
    size_t operator()(const Word& w) const {
      size_t h = 1469598103934665603ull;
      for (int g : w) {
        h ^= static_cast<size_t>(g) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  mutable std::unordered_map<Word, NCPoly, WordHash> memo_;
  // Guards memo_ only; shared_ptr keeps the class copyable and movable.
  std::shared_ptr<std::mutex> memo_mutex_ = std::make_shared<std::mutex>();
};

}  // namespace hopfgs
