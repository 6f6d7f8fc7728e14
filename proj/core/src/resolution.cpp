/**
 * @file resolution.cpp
 * @brief φ-map evaluators, their certificates, and the induced 4-term complexes.
 */
#include "hopfgs/resolution.hpp"

#include <sstream>

namespace hopfgs {

namespace {

struct Gens {
  int a, b, c, d;
  Scalar q, qi;
};

Gens gens_of(const BEAlgebra& A) {
  if (A.matrix_size() != 2 || !A.q_param)
    throw ValidationError("resolution maps require the 2x2 quantum SL(2) algebra");
  Gens g;
  g.a = A.generator_id(0, 0);
  g.b = A.generator_id(0, 1);
  g.c = A.generator_id(1, 0);
  g.d = A.generator_id(1, 1);
  g.q = *A.q_param;
  g.qi = g.q.inverse();
  return g;
}

/// ε restricted to the even (parity 0) or odd (parity 1) part of an element.
Scalar eps_parity(const BEAlgebra& A, const SparseVec& y, int parity) {
  Scalar out(0);
  for (const auto& [id, c] : y)
    if (A.parity(id) == parity) out = out + c * A.counit(id);
  return out;
}

/// λ with vals = λ·f entrywise; throws if no such λ exists.
Scalar proportionality(const std::map<int, Scalar>& vals, const SparseVec& f,
                       const std::string& context) {
  Scalar lambda(0);
  for (const auto& [k, fv] : f) {
    auto it = vals.find(k);
    lambda = (it == vals.end()) ? Scalar(0) : it->second * fv.inverse();
    break;
  }
  for (const auto& [k, fv] : f) {
    auto it = vals.find(k);
    Scalar got = (it == vals.end()) ? Scalar(0) : it->second;
    if (got != lambda * fv)
      throw ValidationError(context + ": composed functional is not proportional to the basis");
  }
  for (const auto& [k, v] : vals)
    if (f.find(k) == f.end() && !v.is_zero())
      throw ValidationError(context + ": composed functional is not proportional to the basis");
  return lambda;
}

}  // namespace

std::array<SparseVec, 4> ResolutionMaps::phi1(const SparseVec& x) const {
  const BEAlgebra& A = *alg;
  Gens g = gens_of(A);
  // φ₁(x) = Σ slots ⊗ coeffs: (−q⁻¹+qd, −c, −b, −q+q⁻¹a) · x.
  SparseVec c0 = A.scaled_unit(Scalar(0) - g.qi);
  axpy(c0, g.q, SparseVec{{g.d, Scalar(1)}});
  SparseVec c1{{g.c, Scalar(-1)}};
  SparseVec c2{{g.b, Scalar(-1)}};
  SparseVec c3 = A.scaled_unit(Scalar(0) - g.q);
  axpy(c3, g.qi, SparseVec{{g.a, Scalar(1)}});
  return {A.mult(c0, x), A.mult(c1, x), A.mult(c2, x), A.mult(c3, x)};
}

std::array<SparseVec, 4> ResolutionMaps::phi2(int slot, const SparseVec& x) const {
  const BEAlgebra& A = *alg;
  Gens g = gens_of(A);
  std::array<SparseVec, 4> out;
  auto put = [&](int t, const SparseVec& coeff) { out[static_cast<size_t>(t)] = A.mult(coeff, x); };
  switch (slot) {
    case 0:  // idx0 ↦ idx0⊗x + idx2⊗(−q b x) + idx3⊗(a x)
      put(0, A.unit());
      put(2, SparseVec{{g.b, Scalar(0) - g.q}});
      put(3, SparseVec{{g.a, Scalar(1)}});
      break;
    case 1: {  // idx1 ↦ idx0⊗(b x) + idx1⊗((1−q⁻¹a) x)
      put(0, SparseVec{{g.b, Scalar(1)}});
      SparseVec coeff = A.unit();
      axpy(coeff, Scalar(0) - g.qi, SparseVec{{g.a, Scalar(1)}});
      put(1, coeff);
      break;
    }
    case 2: {  // idx2 ↦ idx2⊗((1−q d) x) + idx3⊗(c x)
      SparseVec coeff = A.unit();
      axpy(coeff, Scalar(0) - g.q, SparseVec{{g.d, Scalar(1)}});
      put(2, coeff);
      put(3, SparseVec{{g.c, Scalar(1)}});
      break;
    }
    case 3:  // idx3 ↦ idx0⊗(d x) + idx1⊗(−q⁻¹ c x) + idx3⊗x
      put(0, SparseVec{{g.d, Scalar(1)}});
      put(1, SparseVec{{g.c, Scalar(0) - g.qi}});
      put(3, A.unit());
      break;
    default:
      throw ValidationError("slot out of range");
  }
  return out;
}

SparseVec ResolutionMaps::phi3(int slot, const SparseVec& x) const {
  const BEAlgebra& A = *alg;
  Gens g = gens_of(A);
  SparseVec coeff;
  switch (slot) {
    case 0:  // (a−1)x
      coeff = SparseVec{{g.a, Scalar(1)}};
      axpy(coeff, Scalar(-1), A.unit());
      break;
    case 1:
      coeff = SparseVec{{g.b, Scalar(1)}};
      break;
    case 2:
      coeff = SparseVec{{g.c, Scalar(1)}};
      break;
    case 3:  // (d−1)x
      coeff = SparseVec{{g.d, Scalar(1)}};
      axpy(coeff, Scalar(-1), A.unit());
      break;
    default:
      throw ValidationError("slot out of range");
  }
  return A.mult(coeff, x);
}

Scalar ResolutionMaps::eps_hat(const SparseVec& x) const { return alg->counit(x); }

ResolutionMaps resolution_maps(const BEAlgebra& A) {
  (void)gens_of(A);  // validates shape and q
  ResolutionMaps m;
  m.alg = &A;
  return m;
}

ResolutionReport check_resolution(const BEAlgebra& A, int max_degree) {
  ResolutionReport rep;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    if (rep.failures.size() < 8) rep.failures.push_back(std::move(msg));
  };
  ResolutionMaps maps = resolution_maps(A);
  int deg = std::min(max_degree, A.truncation_degree() - 2);
  std::vector<int> xs = A.basis_up_to(deg);
  for (int x : xs) {
    SparseVec ex{{x, Scalar(1)}};
    // φ₂ ∘ φ₁ = 0.
    {
      std::array<SparseVec, 4> mid = maps.phi1(ex);
      std::array<SparseVec, 4> total;
      for (int s = 0; s < 4; ++s) {
        if (mid[static_cast<size_t>(s)].empty()) continue;
        std::array<SparseVec, 4> part = maps.phi2(s, mid[static_cast<size_t>(s)]);
        for (int t = 0; t < 4; ++t) axpy(total[static_cast<size_t>(t)], Scalar(1), part[static_cast<size_t>(t)]);
      }
      ++rep.compositions_checked;
      for (int t = 0; t < 4; ++t)
        if (!total[static_cast<size_t>(t)].empty()) {
          fail("phi2(phi1(x)) != 0 at x = " + A.basis_name(x));
          break;
        }
    }
    // φ₃ ∘ φ₂ = 0 and ε̂ ∘ φ₃ = 0 per slot.
    for (int s = 0; s < 4; ++s) {
      std::array<SparseVec, 4> mid = maps.phi2(s, ex);
      SparseVec total;
      for (int t = 0; t < 4; ++t)
        if (!mid[static_cast<size_t>(t)].empty())
          axpy(total, Scalar(1), maps.phi3(t, mid[static_cast<size_t>(t)]));
      ++rep.compositions_checked;
      if (!total.empty()) fail("phi3(phi2(slot " + std::to_string(s) + " ⊗ x)) != 0 at x = " + A.basis_name(x));
      ++rep.compositions_checked;
      if (!maps.eps_hat(maps.phi3(s, ex)).is_zero())
        fail("eps(phi3(slot " + std::to_string(s) + " ⊗ x)) != 0 at x = " + A.basis_name(x));
    }
    // Right-A-linearity against the generators.
    if (A.degree(x) + 2 > A.truncation_degree()) continue;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        SparseVec eg{{A.generator_id(i, j), Scalar(1)}};
        SparseVec xg = A.mult(ex, eg);
        {
          std::array<SparseVec, 4> lhs = maps.phi1(xg);
          std::array<SparseVec, 4> rhs = maps.phi1(ex);
          for (auto& v : rhs) v = A.mult(v, eg);
          ++rep.linearity_pairs;
          if (lhs != rhs) fail("phi1 not right-linear at x = " + A.basis_name(x));
        }
        for (int s = 0; s < 4; ++s) {
          std::array<SparseVec, 4> lhs = maps.phi2(s, xg);
          std::array<SparseVec, 4> rhs = maps.phi2(s, ex);
          for (auto& v : rhs) v = A.mult(v, eg);
          ++rep.linearity_pairs;
          if (lhs != rhs) fail("phi2 not right-linear at slot " + std::to_string(s) + ", x = " + A.basis_name(x));
          SparseVec l3 = maps.phi3(s, xg);
          SparseVec r3 = A.mult(maps.phi3(s, ex), eg);
          ++rep.linearity_pairs;
          if (l3 != r3) fail("phi3 not right-linear at slot " + std::to_string(s) + ", x = " + A.basis_name(x));
        }
      }
  }
  return rep;
}

SparseVec invariant_functional(const BEAlgebra& A) {
  Comodule V = fundamental_comodule(A);
  Comodule W = tensor_comodule(dual_comodule(V), V);
  HomSpaceBasis basis = colinear_hom(W, trivial_comodule(A));
  if (basis.dim() != 1) {
    std::ostringstream os;
    os << "invariant functional space on V*⊗V has dimension " << basis.dim() << ", expected 1";
    throw ValidationError(os.str());
  }
  SparseVec f = basis.vectors[0];
  Scalar pivot(0);
  auto it0 = f.find(0);
  if (it0 != f.end() && !it0->second.is_zero()) {
    pivot = it0->second;
  } else {
    for (const auto& [k, v] : f)
      if (!v.is_zero()) {
        pivot = v;
        break;
      }
  }
  if (pivot.is_zero()) throw ValidationError("invariant functional is zero");
  Scalar scale = pivot.inverse();
  for (auto& [k, v] : f) v = v * scale;
  return f;
}

namespace {

/// Common scaffolding for both 4-term complexes.
struct ResolutionSetup {
  BEAlgebra A;
  ResolutionMaps maps;
  SparseVec fW;                       // invariant functional on V*⊗V
  SparseVec fC{{0, Scalar(1)}};       // functional on the 1-slot space
  std::array<const SparseVec*, 4> term_basis() {
    return {&fC, &fW, &fW, &fC};
  }
  std::array<int, 4> term_slots() { return {1, 4, 4, 1}; }
};

ResolutionSetup make_setup(const Scalar& q, int degree_bound) {
  if (q.is_zero()) throw ValidationError("q must be nonzero");
  if ((q + q.inverse()).is_zero()) throw ValidationError("q + 1/q must be nonzero");
  if (degree_bound < 4) throw ValidationError("degree bound too small for the resolution");
  ResolutionSetup s{BEAlgebra::quantum_sl2(q, degree_bound), ResolutionMaps{}, SparseVec{}};
  s.fW = invariant_functional(s.A);
  return s;  // maps is rebound by the caller once the object has its final address
}

/// φ_{3−i}(s⊗1) for the i-th differential, as slot components over the
/// *input* term's slot space.
std::vector<SparseVec> phi_components(const ResolutionSetup& s, int i, int out_slot) {
  SparseVec one = s.A.unit();
  switch (i) {
    case 0: {  // φ₃ : P₁ → P₀, single input slot
      return {s.maps.phi3(out_slot, one)};
    }
    case 1: {  // φ₂ : P₂ → P₁
      std::array<SparseVec, 4> comps = s.maps.phi2(out_slot, one);
      return {comps.begin(), comps.end()};
    }
    case 2: {  // φ₁ : P₃ → P₂, single output slot space ℂ⊠A (out_slot = 0)
      std::array<SparseVec, 4> comps = s.maps.phi1(one);
      return {comps.begin(), comps.end()};
    }
    default:
      throw ValidationError("differential index out of range");
  }
}

}  // namespace

CochainComplex resolution_complex_sl2(const Scalar& q, int degree_bound) {
  ResolutionSetup s = make_setup(q, degree_bound);
  s.maps = resolution_maps(s.A);
  auto bases = s.term_basis();
  auto slots = s.term_slots();
  std::vector<SparseMatrix> diffs;
  for (int i = 0; i < 3; ++i) {
    const SparseVec& f_in = *bases[static_cast<size_t>(i)];
    const SparseVec& f_out = *bases[static_cast<size_t>(i) + 1];
    std::map<int, Scalar> vals;
    for (int out_slot = 0; out_slot < slots[static_cast<size_t>(i) + 1]; ++out_slot) {
      std::vector<SparseVec> comps = phi_components(s, i, out_slot);
      Scalar v(0);
      for (int sp = 0; sp < static_cast<int>(comps.size()); ++sp) {
        auto it = f_in.find(sp);
        if (it == f_in.end()) continue;
        v = v + it->second * s.A.counit(comps[static_cast<size_t>(sp)]);
      }
      if (!v.is_zero()) vals[out_slot] = v;
    }
    Scalar lambda = proportionality(vals, f_out, "adjunction differential " + std::to_string(i));
    SparseMatrix d(1, 1);
    d.set(0, 0, lambda);
    diffs.push_back(std::move(d));
  }
  return CochainComplex({1, 1, 1, 1}, std::move(diffs));
}

CochainComplex resolution_complex_psl2(const Scalar& q, int degree_bound) {
  ResolutionSetup s = make_setup(q, degree_bound);
  s.maps = resolution_maps(s.A);
  // The even-part route needs every V*⊗V coaction leg even.
  {
    Comodule V = fundamental_comodule(s.A);
    Comodule W = tensor_comodule(dual_comodule(V), V);
    for (int j = 0; j < W.dim; ++j)
      for (const auto& [i, c] : W.coaction(j))
        for (const auto& [id, cc] : c)
          if (s.A.parity(id) != 0)
            throw ValidationError("V*⊗V coaction is not even; even-part route unavailable");
  }
  Scalar m = q + q.inverse();
  Scalar minv = m.inverse();
  SparseVec chi = s.A.chi();
  auto bases = s.term_basis();
  auto slots = s.term_slots();

  std::vector<SparseMatrix> diffs;
  for (int i = 0; i < 3; ++i) {
    const SparseVec& f_in = *bases[static_cast<size_t>(i)];
    const SparseVec& f_out = *bases[static_cast<size_t>(i) + 1];
    SparseMatrix d(2, 2);
    for (int k = 0; k < 2; ++k) {  // input coordinate basis: (f,0), (0,f)
      Scalar c1(k == 0 ? 1 : 0), c2(k == 0 ? 0 : 1);
      for (int t = 0; t < 2; ++t) {  // output coordinate: evaluate at −⊗χᵗ
        std::map<int, Scalar> vals;
        for (int out_slot = 0; out_slot < slots[static_cast<size_t>(i) + 1]; ++out_slot) {
          std::vector<SparseVec> comps = phi_components(s, i, out_slot);
          Scalar v(0);
          for (int sp = 0; sp < static_cast<int>(comps.size()); ++sp) {
            auto it = f_in.find(sp);
            if (it == f_in.end() || comps[static_cast<size_t>(sp)].empty()) continue;
            SparseVec y = (t == 0) ? comps[static_cast<size_t>(sp)]
                                   : s.A.mult(comps[static_cast<size_t>(sp)], chi);
            v = v + it->second * (c1 * eps_parity(s.A, y, 0) + minv * c2 * eps_parity(s.A, y, 1));
          }
          if (!v.is_zero()) vals[out_slot] = v;
        }
        Scalar lambda =
            proportionality(vals, f_out, "even-part differential " + std::to_string(i));
        if (!lambda.is_zero()) d.set(t, k, lambda);
      }
    }
    diffs.push_back(std::move(d));
  }
  return CochainComplex({2, 2, 2, 2}, std::move(diffs));
}

Scalar reconstruct_psi(const BEAlgebra& A, const SparseVec& f, int slot, const Scalar& c1,
                       const Scalar& c2, const SparseVec& y) {
  Scalar m = A.counit(A.chi());
  if (m.is_zero()) throw ValidationError("eps(chi) must be nonzero");
  auto it = f.find(slot);
  Scalar fw = (it == f.end()) ? Scalar(0) : it->second;
  return fw * (c1 * eps_parity(A, y, 0) + m.inverse() * c2 * eps_parity(A, y, 1));
}

}  // namespace hopfgs
