/**
 * @file hopf.cpp
 * @brief Element-level Hopf operations and the degree-bounded axiom checker.
 */
#include "hopfgs/hopf.hpp"

#include <sstream>

namespace hopfgs {

namespace {

void add_scaled(SparseVec& acc, const Scalar& c, const SparseVec& v) { axpy(acc, c, v); }

void add_scaled(Tensor2& acc, const Scalar& c, const Tensor2& t) {
  if (c.is_zero()) return;
  for (const auto& [k, val] : t) {
    Scalar& slot = acc[k];
    slot = slot + c * val;
    if (slot.is_zero()) acc.erase(k);
  }
}

void add_scaled(Tensor3& acc, const Scalar& c, const Tensor3& t) {
  if (c.is_zero()) return;
  for (const auto& [k, val] : t) {
    Scalar& slot = acc[k];
    slot = slot + c * val;
    if (slot.is_zero()) acc.erase(k);
  }
}

std::string tensor2_str(const HopfAlgebra& A, const Tensor2& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << A.basis_name(k.first) << "(x)" << A.basis_name(k.second);
  }
  return os.str();
}

}  // namespace

std::vector<std::vector<Scalar>> HopfAlgebra::one_dim_modules() const {
  std::vector<Scalar> eps(static_cast<size_t>(dim()));
  for (int i = 0; i < dim(); ++i) eps[static_cast<size_t>(i)] = counit(i);
  return {eps};
}

SparseVec HopfAlgebra::mult(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) add_scaled(out, a * b, mult(i, j));
  return out;
}

SparseVec HopfAlgebra::mult(const SparseVec& x, int j) const {
  SparseVec out;
  for (const auto& [i, a] : x) add_scaled(out, a, mult(i, j));
  return out;
}

SparseVec HopfAlgebra::mult(int i, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [j, b] : y) add_scaled(out, b, mult(i, j));
  return out;
}

Tensor2 HopfAlgebra::comul(const SparseVec& x) const {
  Tensor2 out;
  for (const auto& [i, a] : x) add_scaled(out, a, comul(i));
  return out;
}

Tensor3 HopfAlgebra::comul2(int i) const {
  Tensor3 out;
  for (const auto& [pair, c] : comul(i)) {
    for (const auto& [inner, d] : comul(pair.first)) {
      std::array<int, 3> key{inner.first, inner.second, pair.second};
      Scalar& slot = out[key];
      slot = slot + c * d;
      if (slot.is_zero()) out.erase(key);
    }
  }
  return out;
}

Tensor3 HopfAlgebra::comul2(const SparseVec& x) const {
  Tensor3 out;
  for (const auto& [i, a] : x) add_scaled(out, a, comul2(i));
  return out;
}

Tensor4 HopfAlgebra::comul3(int i) const {
  Tensor4 out;
  for (const auto& [triple, c] : comul2(i)) {
    for (const auto& [inner, d] : comul(triple[0])) {
      std::array<int, 4> key{inner.first, inner.second, triple[1], triple[2]};
      Scalar& slot = out[key];
      slot = slot + c * d;
      if (slot.is_zero()) out.erase(key);
    }
  }
  return out;
}

Scalar HopfAlgebra::counit(const SparseVec& x) const {
  Scalar out;
  for (const auto& [i, a] : x) out = out + a * counit(i);
  return out;
}

SparseVec HopfAlgebra::antipode(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, a] : x) add_scaled(out, a, antipode(i));
  return out;
}

Scalar HopfAlgebra::haar(const SparseVec& x) const {
  Scalar out;
  for (const auto& [i, a] : x) out = out + a * haar(i);
  return out;
}

SparseVec HopfAlgebra::scaled_unit(const Scalar& s) const {
  SparseVec out;
  axpy(out, s, unit());
  return out;
}

std::string HopfAlgebra::element_str(const SparseVec& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << basis_name(i);
  }
  return os.str();
}

namespace {

constexpr size_t kMaxWitnesses = 12;

void record(AxiomReport& rep, std::string msg) {
  rep.pass = false;
  if (rep.failures.size() < kMaxWitnesses) rep.failures.push_back(std::move(msg));
}

}  // namespace

AxiomReport check_hopf_axioms(const HopfAlgebra& A, int max_degree) {
  AxiomReport rep;
  rep.checked_degree = max_degree;
  const int n = A.dim();
  std::vector<int> ids;
  for (int i = 0; i < n; ++i)
    if (A.degree(i) <= max_degree) ids.push_back(i);

  const SparseVec one = A.unit();

  // Unit laws.
  for (int i : ids) {
    if (A.mult(one, i) != SparseVec{{i, Scalar(1)}})
      record(rep, "1*" + A.basis_name(i) + " != " + A.basis_name(i));
    if (A.mult(i, one) != SparseVec{{i, Scalar(1)}})
      record(rep, A.basis_name(i) + "*1 != " + A.basis_name(i));
  }

  // Associativity on all basis triples whose total degree fits the bound.
  for (int i : ids)
    for (int j : ids) {
      if (A.degree(i) + A.degree(j) > max_degree) continue;
      const SparseVec ij = A.mult(i, j);
      for (int k : ids) {
        if (A.degree(i) + A.degree(j) + A.degree(k) > max_degree) continue;
        SparseVec lhs = A.mult(ij, k);
        SparseVec rhs = A.mult(i, A.mult(j, k));
        if (lhs != rhs)
          record(rep, "associativity fails at (" + A.basis_name(i) + "," + A.basis_name(j) + "," +
                          A.basis_name(k) + ")");
      }
    }

  // Coassociativity and counit laws.
  for (int i : ids) {
    Tensor3 lhs;  // (Δ⊗id)Δ
    Tensor3 rhs;  // (id⊗Δ)Δ
    for (const auto& [pair, c] : A.comul(i)) {
      for (const auto& [inner, d] : A.comul(pair.first)) {
        std::array<int, 3> key{inner.first, inner.second, pair.second};
        Scalar& slot = lhs[key];
        slot = slot + c * d;
        if (slot.is_zero()) lhs.erase(key);
      }
      for (const auto& [inner, d] : A.comul(pair.second)) {
        std::array<int, 3> key{pair.first, inner.first, inner.second};
        Scalar& slot = rhs[key];
        slot = slot + c * d;
        if (slot.is_zero()) rhs.erase(key);
      }
    }
    if (lhs != rhs) record(rep, "coassociativity fails at " + A.basis_name(i));

    SparseVec left, right;
    for (const auto& [pair, c] : A.comul(i)) {
      Scalar lc = c * A.counit(pair.first);
      if (!lc.is_zero()) {
        Scalar& slot = left[pair.second];
        slot = slot + lc;
        if (slot.is_zero()) left.erase(pair.second);
      }
      Scalar rc = c * A.counit(pair.second);
      if (!rc.is_zero()) {
        Scalar& slot = right[pair.first];
        slot = slot + rc;
        if (slot.is_zero()) right.erase(pair.first);
      }
    }
    SparseVec expect{{i, Scalar(1)}};
    if (left != expect) record(rep, "(eps(x)id)Delta fails at " + A.basis_name(i));
    if (right != expect) record(rep, "(id(x)eps)Delta fails at " + A.basis_name(i));
  }

  // Δ and ε are algebra maps; S is anti-multiplicative.
  for (int i : ids)
    for (int j : ids) {
      if (A.degree(i) + A.degree(j) > max_degree) continue;
      const SparseVec ij = A.mult(i, j);

      Tensor2 lhs = A.comul(ij);
      Tensor2 rhs;
      for (const auto& [p, c] : A.comul(i))
        for (const auto& [q, d] : A.comul(j)) {
          SparseVec first = A.mult(p.first, q.first);
          SparseVec second = A.mult(p.second, q.second);
          for (const auto& [fi, fc] : first)
            for (const auto& [si, sc] : second) {
              std::pair<int, int> key{fi, si};
              Scalar& slot = rhs[key];
              slot = slot + c * d * fc * sc;
              if (slot.is_zero()) rhs.erase(key);
            }
        }
      if (lhs != rhs)
        record(rep, "Delta not multiplicative at (" + A.basis_name(i) + "," + A.basis_name(j) +
                        "): Delta(xy) = " + tensor2_str(A, lhs));

      Scalar el = A.counit(ij);
      Scalar er = A.counit(i) * A.counit(j);
      if (!(el == er))
        record(rep, "eps not multiplicative at (" + A.basis_name(i) + "," + A.basis_name(j) + ")");

      SparseVec sl = A.antipode(ij);
      SparseVec sr = A.mult(A.antipode(j), A.antipode(i));
      if (sl != sr)
        record(rep, "antipode not anti-multiplicative, S(xy) != S(y)S(x) at (" + A.basis_name(i) +
                        "," + A.basis_name(j) + ")");
    }
  if (A.counit(A.unit()) != Scalar(1)) record(rep, "eps(1) != 1");
  {
    Tensor2 d1 = A.comul(one);
    Tensor2 expect;
    for (const auto& [i, a] : one)
      for (const auto& [j, b] : one) {
        Scalar c = a * b;
        if (!c.is_zero()) expect[{i, j}] = c;
      }
    if (d1 != expect) record(rep, "Delta(1) != 1(x)1");
  }

  // Antipode axioms m(S⊗id)Δ = ε·1 = m(id⊗S)Δ.
  for (int i : ids) {
    SparseVec lhs, rhs;
    for (const auto& [pair, c] : A.comul(i)) {
      add_scaled(lhs, c, A.mult(A.antipode(pair.first), pair.second));
      add_scaled(rhs, c, A.mult(pair.first, A.antipode(pair.second)));
    }
    SparseVec expect = A.scaled_unit(A.counit(i));
    if (lhs != expect)
      record(rep, "antipode axiom m(S(x)id)Delta = eps*1 fails at " + A.basis_name(i) + ": got " +
                      A.element_str(lhs) + ", want " + A.element_str(expect));
    if (rhs != expect)
      record(rep, "antipode axiom m(id(x)S)Delta = eps*1 fails at " + A.basis_name(i) + ": got " +
                      A.element_str(rhs) + ", want " + A.element_str(expect));
  }

  // Haar functional: normalized, two-sided invariant.
  if (A.has_haar()) {
    if (!(A.haar(A.unit()) == Scalar(1))) record(rep, "h(1) != 1");
    for (int i : ids) {
      SparseVec left, right;
      for (const auto& [pair, c] : A.comul(i)) {
        Scalar lc = c * A.haar(pair.first);
        if (!lc.is_zero()) {
          Scalar& slot = left[pair.second];
          slot = slot + lc;
          if (slot.is_zero()) left.erase(pair.second);
        }
        Scalar rc = c * A.haar(pair.second);
        if (!rc.is_zero()) {
          Scalar& slot = right[pair.first];
          slot = slot + rc;
          if (slot.is_zero()) right.erase(pair.first);
        }
      }
      SparseVec expect = A.scaled_unit(A.haar(i));
      if (left != expect) record(rep, "(h(x)id)Delta != h*1 at " + A.basis_name(i));
      if (right != expect) record(rep, "(id(x)h)Delta != h*1 at " + A.basis_name(i));
    }
  }

  return rep;
}

bool check_kac(const HopfAlgebra& A, int max_degree, std::string* witness) {
  for (int i = 0; i < A.dim(); ++i) {
    if (A.degree(i) > max_degree) continue;
    SparseVec ss = A.antipode(A.antipode(i));
    if (ss != SparseVec{{i, Scalar(1)}}) {
      if (witness)
        *witness = "S^2(" + A.basis_name(i) + ") = " + A.element_str(ss) + " != " + A.basis_name(i);
      return false;
    }
  }
  return true;
}

}  // namespace hopfgs
