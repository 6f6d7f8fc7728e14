/**
 * @file presentations.cpp
 * @brief A_s(n) / A_h(n) presentations and their mechanical cross-checks.
 */
#include "hopfgs/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopfgs/hopf.hpp"  // ValidationError

namespace hopfgs {

namespace {

int gen_id(int n, int i, int j) { return n * i + j; }

std::vector<std::string> gen_names(int n, const std::string& letter) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      names.push_back(letter + std::to_string(i + 1) + std::to_string(j + 1));
  return names;
}

void require_n(int n) {
  if (n < 2) throw ValidationError("presentation requires n >= 2");
}

/// All words over `gens` generators of length <= max_len, shortest first.
std::vector<Word> words_up_to(int gens, int max_len) {
  std::vector<Word> out;
  out.push_back({});
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (int g = 0; g < gens; ++g) {
        Word w = out[i];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

int relation_degree(const NCPoly& r) {
  int d = 0;
  for (const auto& [w, c] : r) d = std::max<int>(d, static_cast<int>(w.size()));
  return d;
}

}  // namespace

Presentation as_presentation(int n) {
  require_n(n);
  Presentation P;
  P.algebra_name = "A_s(" + std::to_string(n) + ")";
  P.n = n;
  P.names = gen_names(n, "x");
  const Scalar one(1), minus_one(-1);
  // Row and column sums equal 1.
  for (int i = 0; i < n; ++i) {
    NCPoly row, col;
    row[Word{}] = minus_one;
    col[Word{}] = minus_one;
    for (int l = 0; l < n; ++l) {
      row[Word{gen_id(n, i, l)}] = one;
      col[Word{gen_id(n, l, i)}] = one;
    }
    P.relations.push_back(std::move(row));
    P.relations.push_back(std::move(col));
  }
  // x_ik x_ij = delta_kj x_ij and x_ki x_ji = delta_kj x_ji.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        NCPoly row;
        row[Word{gen_id(n, i, k), gen_id(n, i, j)}] = one;
        if (k == j) row[Word{gen_id(n, i, j)}] = minus_one;
        P.relations.push_back(std::move(row));
        NCPoly col;
        col[Word{gen_id(n, k, i), gen_id(n, j, i)}] = one;
        if (k == j) col[Word{gen_id(n, j, i)}] = minus_one;
        P.relations.push_back(std::move(col));
      }
  return P;
}

Presentation ah_presentation(int n) {
  require_n(n);
  Presentation P;
  P.algebra_name = "A_h(" + std::to_string(n) + ")";
  P.n = n;
  P.names = gen_names(n, "a");
  const Scalar one(1), minus_one(-1);
  // Row and column sums of squares equal 1.
  for (int i = 0; i < n; ++i) {
    NCPoly row, col;
    row[Word{}] = minus_one;
    col[Word{}] = minus_one;
    for (int l = 0; l < n; ++l) {
      row[Word{gen_id(n, i, l), gen_id(n, i, l)}] = one;
      col[Word{gen_id(n, l, i), gen_id(n, l, i)}] = one;
    }
    P.relations.push_back(std::move(row));
    P.relations.push_back(std::move(col));
  }
  // a_ik a_ij = 0 = a_ji a_ki for j != k.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        NCPoly row;
        row[Word{gen_id(n, i, k), gen_id(n, i, j)}] = one;
        P.relations.push_back(std::move(row));
        NCPoly col;
        col[Word{gen_id(n, j, i), gen_id(n, k, i)}] = one;
        P.relations.push_back(std::move(col));
      }
  return P;
}

NCPoly NCSpan::reduce(NCPoly p) const {
  NCPoly residue;
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    auto row = rows_.find(lead->first);
    if (row == rows_.end()) {
      residue[lead->first] = lead->second;
      p.erase(lead);
    } else {
      Scalar c = lead->second;
      nc_add_scaled(p, -c, row->second);
    }
  }
  return residue;
}

void NCSpan::insert(NCPoly p) {
  p = reduce(std::move(p));
  if (p.empty()) return;
  auto lead = std::prev(p.end());
  Scalar inv = lead->second.inverse();
  NCPoly monic;
  for (const auto& [w, c] : p) monic[w] = c * inv;
  Word lw = lead->first;
  rows_.emplace(std::move(lw), std::move(monic));
}

bool NCSpan::contains(NCPoly p) const { return reduce(std::move(p)).empty(); }

NCSpan ideal_slice(const Presentation& P, int max_degree) {
  NCSpan span;
  int gens = P.n * P.n;
  for (const auto& r : P.relations) {
    int dr = relation_degree(r);
    int pad = max_degree - dr;
    if (pad < 0) continue;
    std::vector<Word> lefts = words_up_to(gens, pad);
    for (const auto& u : lefts) {
      int right_room = pad - static_cast<int>(u.size());
      std::vector<Word> rights = words_up_to(gens, right_room);
      for (const auto& v : rights) {
        NCPoly urv;
        for (const auto& [w, c] : r) {
          Word word = u;
          word.insert(word.end(), w.begin(), w.end());
          word.insert(word.end(), v.begin(), v.end());
          urv[std::move(word)] = c;
        }
        span.insert(std::move(urv));
      }
    }
  }
  return span;
}

PresentationReport presentation_check_As_Ah(int n) {
  require_n(n);
  PresentationReport rep;
  rep.n = n;
  Presentation As = as_presentation(n);
  Presentation Ah = ah_presentation(n);

  // (i) Quotient to O(S_n): x_ij evaluates on a permutation s to [s(j) = i].
  // Each relation must vanish pointwise on all n! permutations.
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (size_t ri = 0; ri < As.relations.size(); ++ri) {
    const NCPoly& r = As.relations[ri];
    for (const auto& s : perms) {
      Scalar acc(0);
      for (const auto& [w, c] : r) {
        bool ones = true;
        for (int g : w) {
          int i = g / n, j = g % n;
          if (s[static_cast<size_t>(j)] != i) {
            ones = false;
            break;
          }
        }
        if (ones) acc += c;
      }
      if (!acc.is_zero()) {
        std::ostringstream os;
        os << "O(S_n) quotient: relation " << nc_poly_str(r, As.names)
           << " evaluates to " << acc.str() << " on a permutation";
        rep.failures.push_back(os.str());
        break;
      }
    }
    ++rep.quotient_relations_checked;
  }

  // (ii) i: x_ij -> a_ij^2 must send every A_s relation into the defining
  // ideal of A_h (images have degree <= 4, so a degree-4 slice suffices).
  NCSpan ideal_h = ideal_slice(Ah, 4);
  for (const auto& r : As.relations) {
    NCPoly image;
    for (const auto& [w, c] : r) {
      Word doubled;
      doubled.reserve(w.size() * 2);
      for (int g : w) {
        doubled.push_back(g);
        doubled.push_back(g);
      }
      image[std::move(doubled)] = c;
    }
    if (!ideal_h.contains(image))
      rep.failures.push_back("i does not kill relation " + nc_poly_str(r, As.names));
    ++rep.i_relations_checked;
  }

  // pi: a_ij -> x_ij must send every A_h relation into the defining ideal of
  // A_s (images have degree <= 2).
  NCSpan ideal_s = ideal_slice(As, 2);
  for (const auto& r : Ah.relations) {
    // Generators of A_h and A_s share the same index scheme, so pi acts as
    // the identity on words.
    if (!ideal_s.contains(r))
      rep.failures.push_back("pi does not kill relation " + nc_poly_str(r, Ah.names));
    ++rep.pi_relations_checked;
  }

  // pi(i(x_ij)) = x_ij^2 = x_ij modulo the relations of A_s.
  for (int g = 0; g < n * n; ++g) {
    NCPoly diff;
    diff[Word{g, g}] = Scalar(1);
    diff[Word{g}] = Scalar(-1);
    if (!ideal_s.contains(diff))
      rep.failures.push_back("pi(i(" + As.names[static_cast<size_t>(g)] + ")) != " +
                             As.names[static_cast<size_t>(g)]);
    ++rep.pi_i_generators_checked;
  }

  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace hopfgs
