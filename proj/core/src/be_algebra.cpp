/**
 * @file be_algebra.cpp
 * @brief Relation derivation, truncated standard basis, and Hopf structure of B(E).
 */
#include "hopfgs/be_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hopfgs {

ScalarMatrix invert_matrix(const ScalarMatrix& M) {
  const int n = static_cast<int>(M.size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != n) throw ValidationError("matrix to invert is not square");
  // Gauss-Jordan on [M | I].
  std::vector<std::vector<Scalar>> a(M.begin(), M.end());
  ScalarMatrix inv(static_cast<size_t>(n), std::vector<Scalar>(static_cast<size_t>(n), Scalar(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Scalar(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw ValidationError("matrix is singular");
    std::swap(a[c], a[pivot]);
    std::swap(inv[c], inv[pivot]);
    Scalar piv_inv = a[c][c].inverse();
    for (int j = 0; j < n; ++j) {
      a[c][j] = a[c][j] * piv_inv;
      inv[c][j] = inv[c][j] * piv_inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Scalar f = a[r][c];
      for (int j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - f * a[c][j];
        inv[r][j] = inv[r][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

namespace {

ScalarMatrix transpose(const ScalarMatrix& M) {
  const size_t n = M.size();
  ScalarMatrix T(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) T[j][i] = M[i][j];
  return T;
}

ScalarMatrix mat_mult(const ScalarMatrix& A, const ScalarMatrix& B) {
  const size_t n = A.size();
  ScalarMatrix C(n, std::vector<Scalar>(n, Scalar(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) C[i][j] = C[i][j] + A[i][k] * B[k][j];
    }
  return C;
}

}  // namespace

std::vector<NCPoly> derive_be_relations(const ScalarMatrix& E) {
  const int n = static_cast<int>(E.size());
  if (n < 2) throw ValidationError("E must be at least 2x2");
  for (const auto& row : E)
    if (static_cast<int>(row.size()) != n) throw ValidationError("E must be square");
  ScalarMatrix Einv = invert_matrix(E);
  auto gen = [n](int i, int j) { return n * i + j; };

  std::vector<NCPoly> rels;
  // (E⁻¹uᵗEu)_ij = Σ_{k,l,m} E⁻¹_ik u_lk E_lm u_mj = δ_ij
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly p;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            Scalar c = Einv[i][k] * E[l][m];
            if (c.is_zero()) continue;
            Word w{gen(l, k), gen(m, j)};
            Scalar& slot = p[w];
            slot = slot + c;
            if (slot.is_zero()) p.erase(w);
          }
      if (i == j) {
        Word empty;
        Scalar& slot = p[empty];
        slot = slot - Scalar(1);
        if (slot.is_zero()) p.erase(empty);
      }
      if (!p.empty()) rels.push_back(std::move(p));
    }
  // (uE⁻¹uᵗE)_ij = Σ_{k,l,m} u_ik E⁻¹_kl u_ml E_mj = δ_ij
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NCPoly p;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            Scalar c = Einv[k][l] * E[m][j];
            if (c.is_zero()) continue;
            Word w{gen(i, k), gen(m, l)};
            Scalar& slot = p[w];
            slot = slot + c;
            if (slot.is_zero()) p.erase(w);
          }
      if (i == j) {
        Word empty;
        Scalar& slot = p[empty];
        slot = slot - Scalar(1);
        if (slot.is_zero()) p.erase(empty);
      }
      if (!p.empty()) rels.push_back(std::move(p));
    }
  return rels;
}

BEAlgebra::BEAlgebra(ScalarMatrix E, int degree_bound, std::string display_name)
    : n_(static_cast<int>(E.size())), display_name_(std::move(display_name)), E_(std::move(E)) {
  if (n_ < 2) throw ValidationError("B(E) needs a matrix of size at least 2");
  Einv_ = invert_matrix(E_);
  F_ = mat_mult(E_, invert_matrix(transpose(E_)));
  Finv_ = invert_matrix(F_);
  trF_ = Scalar(0);
  for (int i = 0; i < n_; ++i) trF_ = trF_ + F_[i][i];

  std::vector<std::string> names;
  if (n_ == 2) {
    names = {"a", "b", "c", "d"};
  } else {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        names.push_back("u" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  rewrite_.emplace(names, derive_be_relations(E_), degree_bound);

  // Structural invariants of the completed system: rules never increase the
  // degree and preserve parity, so the even part is a subalgebra and the
  // grading-by-parity of every computation below is meaningful.
  for (const auto& r : rewrite_->rules()) {
    for (const auto& [w, c] : r.rhs) {
      if (w.size() > r.lhs.size())
        throw ValidationError("rule increases degree: " + rewrite_->word_str(r.lhs));
      if ((w.size() % 2) != (r.lhs.size() % 2))
        throw ValidationError("rule breaks parity: " + rewrite_->word_str(r.lhs) + " -> " +
                              rewrite_->poly_str(r.rhs));
    }
  }

  basis_ = rewrite_->normal_words(degree_bound);
  for (size_t i = 0; i < basis_.size(); ++i) word_index_[basis_[i]] = static_cast<int>(i);

  // S(u_ij) = (E⁻¹uᵗE)_ij = Σ_{k,l} E⁻¹_ik E_lj u_lk.
  antipode_of_generator_.resize(static_cast<size_t>(n_ * n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      NCPoly p;
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          Scalar c = Einv_[i][k] * E_[l][j];
          if (c.is_zero()) continue;
          Word w{n_ * l + k};
          Scalar& slot = p[w];
          slot = slot + c;
          if (slot.is_zero()) p.erase(w);
        }
      antipode_of_generator_[static_cast<size_t>(n_ * i + j)] = std::move(p);
    }
}

BEAlgebra BEAlgebra::quantum_sl2(const Scalar& q, int degree_bound) {
  if (q.is_zero()) throw ValidationError("q must be nonzero");
  ScalarMatrix E{{Scalar(0), Scalar(1)}, {Scalar(0) - q.inverse(), Scalar(0)}};
  BEAlgebra A(std::move(E), degree_bound, "Oq(SL2)");
  A.q_param = q;
  return A;
}

std::string BEAlgebra::basis_name(int id) const {
  return rewrite_->word_str(basis_.at(static_cast<size_t>(id)));
}

int BEAlgebra::generator_id(int i, int j) const {
  Word w{n_ * i + j};
  return word_id(w);
}

int BEAlgebra::word_id(const Word& w) const {
  auto it = word_index_.find(w);
  if (it == word_index_.end())
    throw ValidationError("word " + rewrite_->word_str(w) + " is not a standard monomial");
  return it->second;
}

SparseVec BEAlgebra::to_element(const NCPoly& p) const {
  SparseVec out;
  for (const auto& [w, c] : p) out[word_id(w)] = c;
  return out;
}

SparseVec BEAlgebra::mult(int i, int j) const {
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    auto it = mult_memo_.find({i, j});
    if (it != mult_memo_.end()) return it->second;
  }
  const Word& wi = basis_.at(static_cast<size_t>(i));
  const Word& wj = basis_.at(static_cast<size_t>(j));
  if (static_cast<int>(wi.size() + wj.size()) > truncation_degree())
    throw DegreeOverflowError("product " + basis_name(i) + " * " + basis_name(j) + " has degree " +
                              std::to_string(wi.size() + wj.size()) + " > bound " +
                              std::to_string(truncation_degree()));
  Word w = wi;
  w.insert(w.end(), wj.begin(), wj.end());
  SparseVec out = to_element(rewrite_->normal_form(w));
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    mult_memo_.emplace(std::make_pair(i, j), out);
  }
  return out;
}

Tensor2 BEAlgebra::comul(int i) const {
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    auto it = comul_memo_.find(i);
    if (it != comul_memo_.end()) return it->second;
  }
  const Word& w = basis_.at(static_cast<size_t>(i));
  const int d = static_cast<int>(w.size());
  Tensor2 out;
  // Δ(u_{i1 j1}···u_{id jd}) = Σ_k (u_{i1 k1}···u_{id kd}) ⊗ (u_{k1 j1}···u_{kd jd}).
  std::vector<int> k(static_cast<size_t>(d), 0);
  while (true) {
    Word left, right;
    for (int t = 0; t < d; ++t) {
      int it_ = w[static_cast<size_t>(t)] / n_;
      int jt = w[static_cast<size_t>(t)] % n_;
      left.push_back(n_ * it_ + k[static_cast<size_t>(t)]);
      right.push_back(n_ * k[static_cast<size_t>(t)] + jt);
    }
    NCPoly ln = rewrite_->normal_form(left);
    if (!ln.empty()) {
      NCPoly rn = rewrite_->normal_form(right);
      for (const auto& [lw, lc] : ln)
        for (const auto& [rw, rc] : rn) {
          std::pair<int, int> key{word_id(lw), word_id(rw)};
          Scalar& slot = out[key];
          slot = slot + lc * rc;
          if (slot.is_zero()) out.erase(key);
        }
    }
    int t = d - 1;
    while (t >= 0 && k[static_cast<size_t>(t)] == n_ - 1) {
      k[static_cast<size_t>(t)] = 0;
      --t;
    }
    if (t < 0) break;
    ++k[static_cast<size_t>(t)];
  }
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    comul_memo_.emplace(i, out);
  }
  return out;
}

Scalar BEAlgebra::counit(int i) const {
  for (int g : basis_.at(static_cast<size_t>(i)))
    if (g / n_ != g % n_) return Scalar(0);
  return Scalar(1);
}

SparseVec BEAlgebra::antipode(int i) const {
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    auto it = antipode_memo_.find(i);
    if (it != antipode_memo_.end()) return it->second;
  }
  const Word& w = basis_.at(static_cast<size_t>(i));
  NCPoly acc{{Word{}, Scalar(1)}};
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    acc = rewrite_->normal_form(nc_concat(acc, antipode_of_generator_[static_cast<size_t>(*it)]));
  SparseVec out = to_element(acc);
  {
    std::lock_guard<std::mutex> lock(*memo_mutex_);
    antipode_memo_.emplace(i, out);
  }
  return out;
}

std::pair<SparseVec, SparseVec> BEAlgebra::parity_split(const SparseVec& x) const {
  SparseVec even, odd;
  for (const auto& [id, c] : x) (parity(id) == 0 ? even : odd)[id] = c;
  return {std::move(even), std::move(odd)};
}

std::vector<int> BEAlgebra::basis_up_to(int max_degree, std::optional<int> par) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (degree(i) > max_degree) continue;
    if (par && parity(i) != *par) continue;
    out.push_back(i);
  }
  return out;
}

int BEAlgebra::dimension_in_degree(int d) const {
  int count = 0;
  for (const auto& w : basis_)
    if (static_cast<int>(w.size()) == d) ++count;
  return count;
}

SparseVec BEAlgebra::cocentral_projection(int id) const {
  const Word& w = basis_.at(static_cast<size_t>(id));
  for (int g : w)
    if (g / n_ != g % n_) return {};
  return SparseVec{{static_cast<int>(w.size() % 2), Scalar(1)}};
}

SparseVec BEAlgebra::cocentral_projection(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, c] : x) axpy(out, c, cocentral_projection(i));
  return out;
}

SparseVec BEAlgebra::sigma(int z2_id) const {
  if (z2_id == 0) return unit();
  if (z2_id != 1) throw ValidationError("sigma is defined on C[Z2] basis ids 0 and 1");
  if (trF_.is_zero()) throw ValidationError("tr(F) = 0: no normalized section exists");
  Scalar tinv = trF_.inverse();
  SparseVec out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Scalar c = tinv * F_[i][j];
      if (!c.is_zero()) {
        Scalar& slot = out[generator_id(i, j)];
        slot = slot + c;
        if (slot.is_zero()) out.erase(generator_id(i, j));
      }
    }
  return out;
}

SparseVec BEAlgebra::chi() const {
  SparseVec out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Scalar c = Scalar(0) - Finv_[i][j];
      if (!c.is_zero()) {
        Scalar& slot = out[generator_id(i, j)];
        slot = slot + c;
        if (slot.is_zero()) out.erase(generator_id(i, j));
      }
    }
  return out;
}

SigmaReport check_sigma(const BEAlgebra& A, int max_degree) {
  SigmaReport rep;
  rep.checked_degree = max_degree;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    if (rep.failures.size() < 12) rep.failures.push_back(std::move(msg));
  };

  // p respects the completed presentation rule by rule.
  auto p_of_word = [&A](const Word& w) -> SparseVec {
    for (int g : w)
      if (g / A.matrix_size() != g % A.matrix_size()) return {};
    return SparseVec{{static_cast<int>(w.size() % 2), Scalar(1)}};
  };
  for (const auto& r : A.rewrite().rules()) {
    SparseVec lhs = p_of_word(r.lhs);
    SparseVec rhs;
    for (const auto& [w, c] : r.rhs) axpy(rhs, c, p_of_word(w));
    if (lhs != rhs)
      fail("p not constant on rule " + A.rewrite().word_str(r.lhs) + " -> " +
           A.rewrite().poly_str(r.rhs));
  }

  // Cocentrality: (p⊗id)Δ = (p⊗id)τΔ on the basis.
  for (int i = 0; i < A.dim(); ++i) {
    if (A.degree(i) > max_degree) continue;
    std::map<std::pair<int, int>, Scalar> lhs, rhs;  // (z2 id, basis id)
    for (const auto& [pair, c] : A.comul(i)) {
      for (const auto& [z, pc] : A.cocentral_projection(pair.first)) {
        std::pair<int, int> key{z, pair.second};
        Scalar& slot = lhs[key];
        slot = slot + c * pc;
        if (slot.is_zero()) lhs.erase(key);
      }
      for (const auto& [z, pc] : A.cocentral_projection(pair.second)) {
        std::pair<int, int> key{z, pair.first};
        Scalar& slot = rhs[key];
        slot = slot + c * pc;
        if (slot.is_zero()) rhs.erase(key);
      }
    }
    if (lhs != rhs) fail("p is not cocentral at basis element " + A.basis_name(i));
  }

  for (int z = 0; z <= 1; ++z) {
    SparseVec s = A.sigma(z);

    // pσ = id.
    SparseVec proj = A.cocentral_projection(s);
    if (proj != SparseVec{{z, Scalar(1)}})
      fail("p(sigma(z)) != z for z2 id " + std::to_string(z) + ": got " +
           (proj.empty() ? std::string("0") : std::string("nontrivial")));

    // σ(x)₍₁₎ ⊗ p(σ(x)₍₂₎) = σ(x₍₁₎) ⊗ x₍₂₎ with Δ(e) = e⊗e, Δ(g) = g⊗g.
    std::map<std::pair<int, int>, Scalar> lhs;  // (basis id, z2 id)
    for (const auto& [pair, c] : A.comul(s))
      for (const auto& [zz, pc] : A.cocentral_projection(pair.second)) {
        std::pair<int, int> key{pair.first, zz};
        Scalar& slot = lhs[key];
        slot = slot + c * pc;
        if (slot.is_zero()) lhs.erase(key);
      }
    std::map<std::pair<int, int>, Scalar> rhs;
    for (const auto& [i, c] : s) rhs[{i, z}] = c;
    if (lhs != rhs) fail("sigma does not intertwine the coproduct at z2 id " + std::to_string(z));

    // σ(x)₍₁₎ S(σ(x)₍₃₎) ⊗ σ(x)₍₂₎ = 1 ⊗ σ(x).
    std::map<std::pair<int, int>, Scalar> conj;  // (first-leg id, middle id)
    for (const auto& [triple, c] : A.comul2(s)) {
      SparseVec prod = A.mult(SparseVec{{triple[0], Scalar(1)}}, A.antipode(triple[2]));
      for (const auto& [k, pc] : prod) {
        std::pair<int, int> key{k, triple[1]};
        Scalar& slot = conj[key];
        slot = slot + c * pc;
        if (slot.is_zero()) conj.erase(key);
      }
    }
    std::map<std::pair<int, int>, Scalar> expect;
    SparseVec one = A.unit();
    for (const auto& [u, uc] : one)
      for (const auto& [i, c] : s) expect[{u, i}] = uc * c;
    if (conj != expect) fail("sigma conjugation identity fails at z2 id " + std::to_string(z));
  }

  // χ is coinvariant for the right adjoint coaction: Σ x₂ ⊗ S(x₁)x₃ = χ ⊗ 1.
  {
    SparseVec chi = A.chi();
    std::map<std::pair<int, int>, Scalar> lhs;
    for (const auto& [triple, c] : A.comul2(chi)) {
      SparseVec prod = A.mult(A.antipode(triple[0]), SparseVec{{triple[2], Scalar(1)}});
      for (const auto& [k, pc] : prod) {
        std::pair<int, int> key{triple[1], k};
        Scalar& slot = lhs[key];
        slot = slot + c * pc;
        if (slot.is_zero()) lhs.erase(key);
      }
    }
    std::map<std::pair<int, int>, Scalar> expect;
    for (const auto& [i, c] : chi)
      for (const auto& [u, uc] : A.unit()) expect[{i, u}] = c * uc;
    if (lhs != expect) fail("chi is not coinvariant for the adjoint coaction");
  }

  return rep;
}

}  // namespace hopfgs
