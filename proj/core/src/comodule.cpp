/**
 * @file comodule.cpp
 * @brief Comodule constructors, validation, and the colinearity solver.
 */
#include "hopfgs/comodule.hpp"

#include <memory>
#include <sstream>

#include "hopfgs/be_algebra.hpp"

namespace hopfgs {

namespace {

/// Materialized coaction matrix: rows[i] = list of (j, c_ij) over columns,
/// cols[j] = list of (i, c_ij) over rows.
struct CoactionMatrix {
  std::vector<std::vector<std::pair<int, SparseVec>>> cols;
  std::vector<std::vector<std::pair<int, SparseVec>>> rows;
};

CoactionMatrix materialize(const Comodule& V) {
  CoactionMatrix M;
  M.cols.resize(static_cast<size_t>(V.dim));
  M.rows.resize(static_cast<size_t>(V.dim));
  for (int j = 0; j < V.dim; ++j) {
    M.cols[static_cast<size_t>(j)] = V.coaction(j);
    for (const auto& [i, c] : M.cols[static_cast<size_t>(j)])
      M.rows.at(static_cast<size_t>(i)).emplace_back(j, c);
  }
  return M;
}

}  // namespace

ComoduleReport check_comodule(const Comodule& V) {
  ComoduleReport rep;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    if (rep.failures.size() < 12) rep.failures.push_back(std::move(msg));
  };
  const HopfAlgebra& A = *V.alg;
  CoactionMatrix M = materialize(V);

  for (int j = 0; j < V.dim; ++j) {
    // (id⊗ε)α = id.
    std::map<int, Scalar> counit_leg;
    for (const auto& [i, c] : M.cols[static_cast<size_t>(j)]) {
      Scalar e = A.counit(c);
      if (!e.is_zero()) counit_leg[i] = e;
    }
    if (counit_leg != std::map<int, Scalar>{{j, Scalar(1)}})
      fail(V.name + ": (id(x)eps)coaction != id at column " + std::to_string(j));

    // Δ(c_ij) = Σ_k c_ik ⊗ c_kj.
    for (const auto& [i, c] : M.cols[static_cast<size_t>(j)]) {
      Tensor2 lhs = A.comul(c);
      Tensor2 rhs;
      for (const auto& [k, cik] : M.rows[static_cast<size_t>(i)]) {
        // cik = c_ik; find c_kj in column j.
        for (const auto& [kk, ckj] : M.cols[static_cast<size_t>(j)]) {
          if (kk != k) continue;
          for (const auto& [m1, v1] : cik)
            for (const auto& [m2, v2] : ckj) {
              std::pair<int, int> key{m1, m2};
              Scalar& slot = rhs[key];
              slot = slot + v1 * v2;
              if (slot.is_zero()) rhs.erase(key);
            }
        }
      }
      if (lhs != rhs)
        fail(V.name + ": coaction matrix not comultiplicative at entry (" + std::to_string(i) +
             "," + std::to_string(j) + ")");
    }
  }
  return rep;
}

Comodule trivial_comodule(const HopfAlgebra& A) {
  Comodule V;
  V.alg = &A;
  V.dim = 1;
  V.name = "triv";
  SparseVec one = A.unit();
  V.coaction = [one](int) { return std::vector<std::pair<int, SparseVec>>{{0, one}}; };
  return V;
}

Comodule fundamental_comodule(const BEAlgebra& A) {
  Comodule V;
  V.alg = &A;
  V.dim = A.matrix_size();
  V.name = "fund";
  const int n = A.matrix_size();
  std::vector<std::vector<std::pair<int, SparseVec>>> cols;
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<int, SparseVec>> col;
    for (int i = 0; i < n; ++i)
      col.emplace_back(i, SparseVec{{A.generator_id(i, j), Scalar(1)}});
    cols.push_back(std::move(col));
  }
  V.coaction = [cols](int j) { return cols.at(static_cast<size_t>(j)); };
  return V;
}

Comodule dual_comodule(const Comodule& V) {
  auto M = std::make_shared<CoactionMatrix>(materialize(V));
  const HopfAlgebra* A = V.alg;
  Comodule D;
  D.alg = A;
  D.dim = V.dim;
  D.name = V.name + "^*";
  D.coaction = [M, A](int j) {
    std::vector<std::pair<int, SparseVec>> out;
    // c*_ij = S(c_ji): run along row j of the original matrix.
    for (const auto& [i, c] : M->rows.at(static_cast<size_t>(j))) {
      SparseVec s = A->antipode(c);
      if (!s.empty()) out.emplace_back(i, std::move(s));
    }
    return out;
  };
  return D;
}

Comodule tensor_comodule(const Comodule& V, const Comodule& W) {
  auto MV = std::make_shared<CoactionMatrix>(materialize(V));
  auto MW = std::make_shared<CoactionMatrix>(materialize(W));
  const HopfAlgebra* A = V.alg;
  const int dw = W.dim;
  Comodule T;
  T.alg = A;
  T.dim = V.dim * W.dim;
  T.name = V.name + "(x)" + W.name;
  T.coaction = [MV, MW, A, dw](int col) {
    const int k = col / dw;
    const int l = col % dw;
    std::map<int, SparseVec> acc;
    for (const auto& [i, cv] : MV->cols.at(static_cast<size_t>(k)))
      for (const auto& [j, cw] : MW->cols.at(static_cast<size_t>(l))) {
        SparseVec prod = A->mult(cv, cw);
        if (!prod.empty()) axpy(acc[i * dw + j], Scalar(1), prod);
      }
    std::vector<std::pair<int, SparseVec>> out;
    for (auto& [row, elt] : acc)
      if (!elt.empty()) out.emplace_back(row, std::move(elt));
    return out;
  };
  return T;
}

Comodule tensor_power_comodule(const HopfAlgebra& A, int n) {
  if (n < 0) throw ValidationError("tensor power needs n >= 0");
  if (n == 0) return trivial_comodule(A);
  const int base = A.dim();
  long dim = 1;
  for (int t = 0; t < n; ++t) {
    dim *= base;
    if (dim > (1L << 40)) throw BudgetExceededError("tensor power dimension overflow");
  }
  Comodule T;
  T.alg = &A;
  T.dim = static_cast<int>(dim);
  T.name = A.name() + "^(x)" + std::to_string(n);
  const HopfAlgebra* Ap = &A;
  T.coaction = [Ap, n, base](int col) {
    std::vector<int> tuple(static_cast<size_t>(n));
    int rest = col;
    for (int t = n - 1; t >= 0; --t) {
      tuple[static_cast<size_t>(t)] = rest % base;
      rest /= base;
    }
    // Partial states: flattened left prefix paired with the product of right legs.
    std::vector<std::pair<long, SparseVec>> partial{{0, Ap->unit()}};
    for (int t = 0; t < n; ++t) {
      std::vector<std::pair<long, SparseVec>> next;
      Tensor2 dt = Ap->comul(tuple[static_cast<size_t>(t)]);
      for (const auto& [prefix, right] : partial)
        for (const auto& [pair, c] : dt) {
          SparseVec nr = Ap->mult(right, pair.second);
          if (nr.empty()) continue;
          for (auto& [id, v] : nr) v = v * c;
          next.emplace_back(prefix * base + pair.first, std::move(nr));
        }
      // Merge duplicate prefixes to keep the state list small.
      std::map<long, SparseVec> merged;
      for (auto& [p, r] : next) axpy(merged[p], Scalar(1), r);
      partial.clear();
      for (auto& [p, r] : merged)
        if (!r.empty()) partial.emplace_back(p, std::move(r));
    }
    std::vector<std::pair<int, SparseVec>> out;
    for (auto& [p, r] : partial) out.emplace_back(static_cast<int>(p), std::move(r));
    return out;
  };
  return T;
}

SparseMatrix HomSpaceBasis::matrix(int index) const {
  SparseMatrix M(target_dim, source_dim);
  for (const auto& [flat, c] : vectors.at(static_cast<size_t>(index)))
    M.set(flat / source_dim, flat % source_dim, c);
  return M;
}

SparseVec HomSpaceBasis::flatten(const SparseMatrix& f) const {
  if (f.rows() != target_dim || f.cols() != source_dim)
    throw std::domain_error("matrix shape mismatch in flatten");
  SparseVec out;
  for (int r = 0; r < f.rows(); ++r)
    for (const auto& [c, v] : f.row(r)) out[r * source_dim + c] = v;
  return out;
}

SparseVec HomSpaceBasis::coordinates(const SparseVec& flat) const {
  return coordinates_in_normalized_basis(vectors, free_cols, flat);
}

HomSpaceBasis colinear_hom(const Comodule& V, const Comodule& W) {
  CoactionMatrix MV = materialize(V);
  CoactionMatrix MW = materialize(W);
  const int dv = V.dim;
  const int dw = W.dim;

  // Unknowns x_(k,j) = f_kj at column k*dv+j. For each (i,j) and algebra
  // basis index m: Σ_k c^W_ik[m] x_kj - Σ_l c^V_lj[m] x_il = 0.
  std::vector<SparseVec> rows;
  for (int i = 0; i < dw; ++i)
    for (int j = 0; j < dv; ++j) {
      std::map<int, SparseVec> by_m;
      for (const auto& [k, c] : MW.rows.at(static_cast<size_t>(i)))
        for (const auto& [m, val] : c) {
          Scalar& slot = by_m[m][k * dv + j];
          slot = slot + val;
          if (slot.is_zero()) by_m[m].erase(k * dv + j);
        }
      for (const auto& [l, c] : MV.cols.at(static_cast<size_t>(j)))
        for (const auto& [m, val] : c) {
          Scalar& slot = by_m[m][i * dv + l];
          slot = slot - val;
          if (slot.is_zero()) by_m[m].erase(i * dv + l);
        }
      for (auto& [m, row] : by_m)
        if (!row.empty()) rows.push_back(std::move(row));
    }

  SparseMatrix C(static_cast<int>(rows.size()), dw * dv);
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, v] : rows[r]) C.set(static_cast<int>(r), col, v);

  HomSpaceBasis out;
  out.source_dim = dv;
  out.target_dim = dw;
  out.description = "Hom^co(" + V.name + ", " + W.name + ")";
  out.free_cols = free_columns(C);
  out.vectors = kernel_basis(C);
  return out;
}

bool is_colinear(const Comodule& V, const Comodule& W, const SparseMatrix& f,
                 std::string* witness) {
  if (f.rows() != W.dim || f.cols() != V.dim)
    throw std::domain_error("candidate map has the wrong shape");
  CoactionMatrix MV = materialize(V);
  CoactionMatrix MW = materialize(W);
  for (int j = 0; j < V.dim; ++j) {
    std::map<std::pair<int, int>, Scalar> diff;  // (target row, algebra id)
    for (int k = 0; k < W.dim; ++k) {
      Scalar fkj = f.get(k, j);
      if (fkj.is_zero()) continue;
      for (const auto& [i, c] : MW.cols.at(static_cast<size_t>(k)))
        for (const auto& [m, val] : c) {
          std::pair<int, int> key{i, m};
          Scalar& slot = diff[key];
          slot = slot + fkj * val;
          if (slot.is_zero()) diff.erase(key);
        }
    }
    for (const auto& [l, c] : MV.cols.at(static_cast<size_t>(j)))
      for (int i = 0; i < W.dim; ++i) {
        Scalar fil = f.get(i, l);
        if (fil.is_zero()) continue;
        for (const auto& [m, val] : c) {
          std::pair<int, int> key{i, m};
          Scalar& slot = diff[key];
          slot = slot - fil * val;
          if (slot.is_zero()) diff.erase(key);
        }
      }
    if (!diff.empty()) {
      if (witness) {
        std::ostringstream os;
        os << "colinearity fails on basis column " << j << " at (row, algebra id) = ("
           << diff.begin()->first.first << ", " << diff.begin()->first.second
           << "), residual " << diff.begin()->second.str();
        *witness = os.str();
      }
      return false;
    }
  }
  return true;
}

}  // namespace hopfgs
