/**
 * @file rewrite.cpp
 * @brief Bounded completion and normal-form computation.
 */
#include "hopfgs/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hopfgs/hopf.hpp"  // DegreeOverflowError, ValidationError

namespace hopfgs {

void nc_add_scaled(NCPoly& acc, const Scalar& c, const NCPoly& p) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : p) {
    Scalar& slot = acc[w];
    slot = slot + c * v;
    if (slot.is_zero()) acc.erase(w);
  }
}

NCPoly nc_concat(const NCPoly& p, const NCPoly& q) {
  NCPoly out;
  for (const auto& [w1, c1] : p)
    for (const auto& [w2, c2] : q) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      Scalar& slot = out[w];
      slot = slot + c1 * c2;
      if (slot.is_zero()) out.erase(w);
    }
  return out;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i > 0) os << "*";
    os << names.at(static_cast<size_t>(w[i]));
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string nc_poly_str(const NCPoly& p, const std::vector<std::string>& names) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Display leading (deglex-largest) terms first.
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")*" << word_str(it->first, names);
  }
  return os.str();
}

namespace {

/// Splits p into its deglex-leading term and the rest, oriented as a rule.
RewriteRule orient(const NCPoly& p) {
  auto lead = std::prev(p.end());
  RewriteRule r;
  r.lhs = lead->first;
  Scalar inv = lead->second.inverse();
  for (auto it = p.begin(); it != lead; ++it) r.rhs[it->first] = Scalar(0) - it->second * inv;
  return r;
}

bool contains_factor(const Word& w, const Word& f) {
  if (f.empty() || f.size() > w.size()) return f.empty();
  for (size_t pos = 0; pos + f.size() <= w.size(); ++pos)
    if (std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(pos))) return true;
  return false;
}

}  // namespace

RewriteSystem::RewriteSystem(std::vector<std::string> generator_names,
                             std::vector<NCPoly> relations, int degree_bound, int rule_budget)
    : names_(std::move(generator_names)), degree_bound_(degree_bound) {
  if (degree_bound_ < 1) throw ValidationError("degree bound must be at least 1");
  std::deque<NCPoly> pending(relations.begin(), relations.end());
  long steps = 0;

  auto push_overlaps = [&](size_t r1, size_t r2) {
    const Word& l1 = rules_[r1].lhs;
    const Word& l2 = rules_[r2].lhs;
    // Proper overlap: a nonempty proper suffix of l1 equals a prefix of l2.
    for (size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
      if (!std::equal(l2.begin(), l2.begin() + static_cast<long>(k),
                      l1.end() - static_cast<long>(k)))
        continue;
      const size_t total = l1.size() + l2.size() - k;
      if (static_cast<int>(total) > degree_bound_) continue;
      // Ambiguity word u = l1 + tail; rewrite u with r1 at 0 and r2 at the end.
      Word tail(l2.begin() + static_cast<long>(k), l2.end());
      Word head(l1.begin(), l1.end() - static_cast<long>(k));
      NCPoly via1;  // rhs1 * tail
      for (const auto& [w, c] : rules_[r1].rhs) {
        Word u = w;
        u.insert(u.end(), tail.begin(), tail.end());
        Scalar& slot = via1[u];
        slot = slot + c;
        if (slot.is_zero()) via1.erase(u);
      }
      NCPoly via2;  // head * rhs2
      for (const auto& [w, c] : rules_[r2].rhs) {
        Word u = head;
        u.insert(u.end(), w.begin(), w.end());
        Scalar& slot = via2[u];
        slot = slot + c;
        if (slot.is_zero()) via2.erase(u);
      }
      nc_add_scaled(via1, Scalar(-1), via2);
      if (!via1.empty()) pending.push_back(via1);
    }
  };

  while (!pending.empty()) {
    if (++steps > 20000) throw ValidationError("rewrite completion did not stabilize");
    NCPoly p = normal_form(pending.front());
    pending.pop_front();
    if (p.empty()) continue;
    RewriteRule r = orient(p);
    if (static_cast<int>(r.lhs.size()) > degree_bound_)
      throw ValidationError("completion produced a rule beyond the degree bound: " +
                            hopfgs::word_str(r.lhs, names_));
    if (r.lhs.empty()) throw ValidationError("relations are inconsistent (1 = 0)");

    // Retire rules whose lhs becomes reducible by the new rule.
    std::vector<RewriteRule> kept;
    for (auto& old : rules_) {
      if (contains_factor(old.lhs, r.lhs)) {
        NCPoly back;
        back[old.lhs] = Scalar(1);
        nc_add_scaled(back, Scalar(-1), old.rhs);
        pending.push_back(back);
      } else {
        kept.push_back(std::move(old));
      }
    }
    rules_ = std::move(kept);
    rules_.push_back(std::move(r));
    memo_.clear();
    if (static_cast<int>(rules_.size()) > rule_budget)
      throw ValidationError("rewrite rule budget exceeded (" + std::to_string(rule_budget) + ")");

    const size_t fresh = rules_.size() - 1;
    for (size_t i = 0; i < rules_.size(); ++i) {
      push_overlaps(i, fresh);
      if (i != fresh) push_overlaps(fresh, i);
    }
  }

  // Canonical presentation: fully reduced right-hand sides, rules in deglex order.
  std::sort(rules_.begin(), rules_.end(),
            [](const RewriteRule& a, const RewriteRule& b) { return DegLexLess{}(a.lhs, b.lhs); });
  for (auto& r : rules_) r.rhs = normal_form(r.rhs);
  memo_.clear();
}

int RewriteSystem::first_match(const Word& w, int* rule_index) const {
  for (size_t pos = 0; pos < w.size(); ++pos)
    for (size_t r = 0; r < rules_.size(); ++r) {
      const Word& l = rules_[r].lhs;
      if (pos + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(pos))) {
        *rule_index = static_cast<int>(r);
        return static_cast<int>(pos);
      }
    }
  return -1;
}

bool RewriteSystem::is_normal_word(const Word& w) const {
  int r;
  return first_match(w, &r) < 0;
}

NCPoly RewriteSystem::reduce_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  int rule = -1;
  int pos = first_match(w, &rule);
  NCPoly out;
  if (pos < 0) {
    out[w] = Scalar(1);
  } else {
    const RewriteRule& r = rules_[static_cast<size_t>(rule)];
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + static_cast<long>(r.lhs.size()), w.end());
    for (const auto& [mid, c] : r.rhs) {
      Word u = prefix;
      u.insert(u.end(), mid.begin(), mid.end());
      u.insert(u.end(), suffix.begin(), suffix.end());
      nc_add_scaled(out, c, reduce_word(u));
    }
  }
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    memo_.emplace(w, out);
  }
  return out;
}

NCPoly RewriteSystem::normal_form(const Word& w) const {
  if (static_cast<int>(w.size()) > degree_bound_)
    throw DegreeOverflowError("word of degree " + std::to_string(w.size()) +
                              " exceeds the truncation bound " + std::to_string(degree_bound_));
  return reduce_word(w);
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p) nc_add_scaled(out, c, normal_form(w));
  return out;
}

std::vector<Word> RewriteSystem::normal_words(int max_degree) const {
  std::vector<Word> out{{}};
  std::vector<Word> level{{}};
  const int n = generators();
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (int g = 0; g < n; ++g) {
        Word u = w;
        u.push_back(g);
        // All proper factors of u not touching the last letter are factors of
        // the irreducible w, so only suffixes of u can match a rule lhs.
        bool reducible = false;
        for (const auto& r : rules_) {
          if (r.lhs.size() > u.size()) continue;
          if (std::equal(r.lhs.begin(), r.lhs.end(), u.end() - static_cast<long>(r.lhs.size()))) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(u));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

RewriteSystem::ConfluenceReport RewriteSystem::check_confluence(int up_to_degree) const {
  ConfluenceReport rep;
  rep.checked_degree = up_to_degree;
  for (size_t i = 0; i < rules_.size(); ++i)
    for (size_t j = 0; j < rules_.size(); ++j) {
      const Word& l1 = rules_[i].lhs;
      const Word& l2 = rules_[j].lhs;
      for (size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (!std::equal(l2.begin(), l2.begin() + static_cast<long>(k),
                        l1.end() - static_cast<long>(k)))
          continue;
        const size_t total = l1.size() + l2.size() - k;
        if (static_cast<int>(total) > up_to_degree) continue;
        ++rep.overlaps_checked;
        Word u(l1.begin(), l1.end());
        u.insert(u.end(), l2.begin() + static_cast<long>(k), l2.end());
        // Path 1: rule i at position 0; path 2: rule j at the overlap position.
        NCPoly via1;
        {
          Word tail(l2.begin() + static_cast<long>(k), l2.end());
          for (const auto& [w, c] : rules_[i].rhs) {
            Word v = w;
            v.insert(v.end(), tail.begin(), tail.end());
            nc_add_scaled(via1, c, NCPoly{{v, Scalar(1)}});
          }
        }
        NCPoly via2;
        {
          Word head(l1.begin(), l1.end() - static_cast<long>(k));
          for (const auto& [w, c] : rules_[j].rhs) {
            Word v = head;
            v.insert(v.end(), w.begin(), w.end());
            nc_add_scaled(via2, c, NCPoly{{v, Scalar(1)}});
          }
        }
        NCPoly n1 = normal_form(via1);
        nc_add_scaled(n1, Scalar(-1), normal_form(via2));
        if (!n1.empty()) {
          rep.confluent = false;
          if (rep.issues.size() < 8)
            rep.issues.push_back("overlap " + hopfgs::word_str(u, names_) + " resolves to " +
                                 nc_poly_str(n1, names_) + " != 0");
        }
      }
    }
  return rep;
}

}  // namespace hopfgs
