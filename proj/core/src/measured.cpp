/**
 * @file measured.cpp
 * @brief Measured algebras, Frobenius duals, φ̃, and normalizability.
 */
#include "hopfgs/measured.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace hopfgs {

SparseVec MeasuredAlgebra::product(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) axpy(out, ci * cj, mult[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return out;
}

Scalar MeasuredAlgebra::measure(const SparseVec& x) const {
  Scalar out(0);
  for (const auto& [i, c] : x) out = out + c * phi[static_cast<size_t>(i)];
  return out;
}

void MeasuredAlgebra::validate() const {
  if (dim <= 0) throw ValidationError("measured algebra must have positive dimension");
  if (static_cast<int>(mult.size()) != dim || static_cast<int>(phi.size()) != dim)
    throw ValidationError("measured algebra tables have wrong shape");
  for (const auto& row : mult)
    if (static_cast<int>(row.size()) != dim)
      throw ValidationError("measured algebra tables have wrong shape");
  for (int i = 0; i < dim; ++i) {
    SparseVec ei{{i, Scalar(1)}};
    if (product(unit, ei) != ei || product(ei, unit) != ei)
      throw ValidationError("unit law fails at basis index " + std::to_string(i));
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        SparseVec ek{{k, Scalar(1)}};
        SparseVec lhs = product(mult[static_cast<size_t>(i)][static_cast<size_t>(j)], ek);
        SparseVec rhs = product(SparseVec{{i, Scalar(1)}}, mult[static_cast<size_t>(j)][static_cast<size_t>(k)]);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails at (" << i << "," << j << "," << k << ")";
          throw ValidationError(os.str());
        }
      }
}

MeasuredAlgebra MeasuredAlgebra::cn(int n) {
  std::vector<Scalar> w(static_cast<size_t>(n), Scalar(1));
  MeasuredAlgebra R = cn_weighted(w);
  R.name = "C^" + std::to_string(n);
  return R;
}

MeasuredAlgebra MeasuredAlgebra::cn_weighted(const std::vector<Scalar>& weights) {
  MeasuredAlgebra R;
  R.dim = static_cast<int>(weights.size());
  if (R.dim == 0) throw ValidationError("measured algebra must have positive dimension");
  R.name = "C^" + std::to_string(R.dim) + " (weighted)";
  R.mult.assign(static_cast<size_t>(R.dim), std::vector<SparseVec>(static_cast<size_t>(R.dim)));
  for (int i = 0; i < R.dim; ++i) {
    R.mult[static_cast<size_t>(i)][static_cast<size_t>(i)] = SparseVec{{i, Scalar(1)}};
    R.unit[i] = Scalar(1);
  }
  R.phi = weights;
  return R;
}

MeasuredAlgebra MeasuredAlgebra::m2_trace() {
  MeasuredAlgebra R = m2_trace_q(Scalar(1));
  R.name = "M2(C) with tr";
  return R;
}

MeasuredAlgebra MeasuredAlgebra::m2_trace_q(const Scalar& q) {
  if (q.is_zero()) throw ValidationError("q must be nonzero");
  MeasuredAlgebra R;
  R.name = "M2(C) with tr_q, q = " + q.str();
  R.dim = 4;
  R.mult.assign(4, std::vector<SparseVec>(4));
  // Matrix units e_{ij} at index 2i+j: e_{ij}·e_{kl} = δ_{jk} e_{il}.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k)
            R.mult[static_cast<size_t>(2 * i + j)][static_cast<size_t>(2 * k + l)] =
                SparseVec{{2 * i + l, Scalar(1)}};
  R.unit = SparseVec{{0, Scalar(1)}, {3, Scalar(1)}};
  R.phi = {q, Scalar(0), Scalar(0), q.inverse()};
  return R;
}

nlohmann::json MeasuredAlgebra::to_json() const {
  nlohmann::json j;
  j["dim"] = dim;
  auto mult_json = nlohmann::json::array();
  for (int i = 0; i < dim; ++i) {
    auto row = nlohmann::json::array();
    for (int jj = 0; jj < dim; ++jj) {
      auto cell = nlohmann::json::array();
      for (int k = 0; k < dim; ++k) {
        auto it = mult[static_cast<size_t>(i)][static_cast<size_t>(jj)].find(k);
        cell.push_back(it == mult[static_cast<size_t>(i)][static_cast<size_t>(jj)].end()
                           ? "0"
                           : it->second.str());
      }
      row.push_back(cell);
    }
    mult_json.push_back(row);
  }
  j["mult"] = mult_json;
  auto unit_json = nlohmann::json::array();
  for (int k = 0; k < dim; ++k) {
    auto it = unit.find(k);
    unit_json.push_back(it == unit.end() ? "0" : it->second.str());
  }
  j["unit"] = unit_json;
  auto phi_json = nlohmann::json::array();
  for (const Scalar& v : phi) phi_json.push_back(v.str());
  j["phi"] = phi_json;
  return j;
}

MeasuredAlgebra MeasuredAlgebra::from_json(const nlohmann::json& j) {
  MeasuredAlgebra R;
  if (!j.contains("dim") || !j.contains("mult") || !j.contains("unit") || !j.contains("phi"))
    throw ValidationError("measured algebra JSON needs dim, mult, unit, phi");
  R.dim = j.at("dim").get<int>();
  R.name = j.value("name", "measured algebra");
  const auto& mj = j.at("mult");
  if (static_cast<int>(mj.size()) != R.dim)
    throw ValidationError("mult table has wrong shape");
  R.mult.assign(static_cast<size_t>(R.dim), std::vector<SparseVec>(static_cast<size_t>(R.dim)));
  for (int i = 0; i < R.dim; ++i) {
    if (static_cast<int>(mj.at(static_cast<size_t>(i)).size()) != R.dim)
      throw ValidationError("mult table has wrong shape");
    for (int jj = 0; jj < R.dim; ++jj) {
      const auto& cell = mj.at(static_cast<size_t>(i)).at(static_cast<size_t>(jj));
      if (static_cast<int>(cell.size()) != R.dim)
        throw ValidationError("mult table has wrong shape");
      for (int k = 0; k < R.dim; ++k) {
        Scalar v = Scalar::parse(cell.at(static_cast<size_t>(k)).get<std::string>());
        if (!v.is_zero()) R.mult[static_cast<size_t>(i)][static_cast<size_t>(jj)][k] = v;
      }
    }
  }
  for (int k = 0; k < R.dim; ++k) {
    Scalar v = Scalar::parse(j.at("unit").at(static_cast<size_t>(k)).get<std::string>());
    if (!v.is_zero()) R.unit[k] = v;
  }
  for (int k = 0; k < R.dim; ++k)
    R.phi.push_back(Scalar::parse(j.at("phi").at(static_cast<size_t>(k)).get<std::string>()));
  R.validate();
  return R;
}

ScalarMatrix gram_matrix(const MeasuredAlgebra& R) {
  ScalarMatrix G(static_cast<size_t>(R.dim), std::vector<Scalar>(static_cast<size_t>(R.dim)));
  for (int i = 0; i < R.dim; ++i)
    for (int j = 0; j < R.dim; ++j)
      G[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          R.measure(R.mult[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  try {
    invert_matrix(G);  // non-degeneracy is part of the measured-algebra contract
  } catch (const ValidationError&) {
    throw ValidationError("degenerate measure: the Gram matrix is singular");
  }
  return G;
}

namespace {

ScalarMatrix dual_coefficients(const MeasuredAlgebra& R) {
  return invert_matrix(gram_matrix(R));
}

}  // namespace

Tensor2 frobenius_dual(const MeasuredAlgebra& R) {
  ScalarMatrix c = dual_coefficients(R);
  Tensor2 delta;
  for (int i = 0; i < R.dim; ++i)
    for (int j = 0; j < R.dim; ++j)
      if (!c[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
        delta[{i, j}] = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
  // Snake identities on the basis.
  for (int k = 0; k < R.dim; ++k) {
    SparseVec ek{{k, Scalar(1)}};
    SparseVec left, right;
    for (const auto& [ij, cc] : delta) {
      Scalar f1 = R.measure(R.mult[static_cast<size_t>(k)][static_cast<size_t>(ij.first)]);
      if (!f1.is_zero()) axpy(left, cc * f1, SparseVec{{ij.second, Scalar(1)}});
      Scalar f2 = R.measure(R.mult[static_cast<size_t>(ij.second)][static_cast<size_t>(k)]);
      if (!f2.is_zero()) axpy(right, cc * f2, SparseVec{{ij.first, Scalar(1)}});
    }
    if (left != ek) throw ValidationError("first snake identity fails at basis index " + std::to_string(k));
    if (right != ek) throw ValidationError("second snake identity fails at basis index " + std::to_string(k));
  }
  return delta;
}

std::vector<Scalar> phi_tilde(const MeasuredAlgebra& R) {
  Tensor2 delta = frobenius_dual(R);
  std::vector<Scalar> out;
  for (int k = 0; k < R.dim; ++k) {
    Scalar v(0);
    for (const auto& [ij, cc] : delta) {
      SparseVec prod = R.product(R.mult[static_cast<size_t>(k)][static_cast<size_t>(ij.first)],
                                 SparseVec{{ij.second, Scalar(1)}});
      v = v + cc * R.measure(prod);
    }
    out.push_back(v);
  }
  return out;
}

MeasuredAlgebra change_of_basis(const MeasuredAlgebra& R, const ScalarMatrix& P) {
  ScalarMatrix Pinv = invert_matrix(P);
  auto col = [&P, &R](int j) {
    SparseVec v;
    for (int i = 0; i < R.dim; ++i)
      if (!P[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
        v[i] = P[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return v;
  };
  auto to_new = [&Pinv, &R](const SparseVec& old) {
    SparseVec v;
    for (int i = 0; i < R.dim; ++i) {
      Scalar acc(0);
      for (const auto& [k, c] : old) acc = acc + Pinv[static_cast<size_t>(i)][static_cast<size_t>(k)] * c;
      if (!acc.is_zero()) v[i] = acc;
    }
    return v;
  };
  MeasuredAlgebra S;
  S.name = R.name + " (basis change)";
  S.dim = R.dim;
  S.mult.assign(static_cast<size_t>(R.dim), std::vector<SparseVec>(static_cast<size_t>(R.dim)));
  for (int i = 0; i < R.dim; ++i)
    for (int j = 0; j < R.dim; ++j)
      S.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = to_new(R.product(col(i), col(j)));
  S.unit = to_new(R.unit);
  for (int i = 0; i < R.dim; ++i) S.phi.push_back(R.measure(col(i)));
  S.validate();
  return S;
}

NormalizabilityReport normalizability(const MeasuredAlgebra& R) {
  R.validate();
  NormalizabilityReport rep;
  rep.phi1 = R.measure(R.unit);
  if (rep.phi1.is_zero()) {
    rep.reason = "phi(1) = 0";
    return rep;
  }
  std::vector<Scalar> tilde = phi_tilde(R);
  int pivot = -1;
  for (int k = 0; k < R.dim; ++k)
    if (!R.phi[static_cast<size_t>(k)].is_zero()) {
      pivot = k;
      break;
    }
  if (pivot < 0) {
    rep.reason = "phi = 0";
    return rep;
  }
  Scalar lambda = tilde[static_cast<size_t>(pivot)] / R.phi[static_cast<size_t>(pivot)];
  for (int k = 0; k < R.dim; ++k)
    if (tilde[static_cast<size_t>(k)] != lambda * R.phi[static_cast<size_t>(k)]) {
      rep.reason = "phi~ is not proportional to phi";
      rep.witness_index = k;
      return rep;
    }
  if (lambda.is_zero()) {
    rep.reason = "lambda = 0";
    return rep;
  }
  rep.normalizable = true;
  rep.lambda = lambda;
  rep.mu_squared = lambda * rep.phi1;
  if (rep.mu_squared.is_rational()) {
    if (auto mu = exact_sqrt(rep.mu_squared.as_rational())) {
      rep.mu = Scalar(*mu);
      Rational disc = (*mu) * (*mu) - 4;
      if (disc >= 0) {
        // Roots pair as (q, 1/q); with μ ≥ 2 the root (μ+√(μ²−4))/2 is the
        // positive one with |q| ≥ 1.
        if (auto s = exact_sqrt(disc)) rep.q = Scalar((*mu + *s) / 2);
      }
    }
  }
  return rep;
}

}  // namespace hopfgs
