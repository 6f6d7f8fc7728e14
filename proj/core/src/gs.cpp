/**
 * @file gs.cpp
 * @brief GS and twisted Hochschild complexes, averaging, and their comparison.
 */
#include "hopfgs/gs.hpp"

#include <random>
#include <sstream>

namespace hopfgs {

namespace {

/// |A|^n with an indexability guard.
long power_dim(int adim, int n) {
  long p = 1;
  for (int t = 0; t < n; ++t) {
    p *= adim;
    if (p > (1L << 30)) throw BudgetExceededError("tensor power too large to index");
  }
  return p;
}

std::vector<int> decode_tuple(long index, int adim, int n) {
  std::vector<int> a(static_cast<size_t>(n));
  for (int t = n - 1; t >= 0; --t) {
    a[static_cast<size_t>(t)] = static_cast<int>(index % adim);
    index /= adim;
  }
  return a;
}

long encode_tuple(const std::vector<int>& a, int adim, int skip_from = -1, int skip_len = 0,
                  int replace = -1) {
  long idx = 0;
  for (int t = 0; t < static_cast<int>(a.size()); ++t) {
    if (skip_from >= 0 && t == skip_from) {
      if (replace >= 0) idx = idx * adim + replace;
      t += skip_len - 1;
      continue;
    }
    idx = idx * adim + a[static_cast<size_t>(t)];
  }
  return idx;
}

}  // namespace

SparseMatrix gs_ambient_differential(const HopfAlgebra& A, const YDModule& V, int n) {
  if (n < 0) throw ValidationError("differential degree must be >= 0");
  const int adim = A.dim();
  const int dv = V.dim;
  const long Sn = power_dim(adim, n);
  const long Sn1 = Sn * adim;
  SparseMatrix D(static_cast<int>(dv * Sn1), static_cast<int>(dv * Sn));
  const Scalar sign_last((n + 1) % 2 == 0 ? 1 : -1);

  for (long tp = 0; tp < Sn1; ++tp) {
    std::vector<int> a = decode_tuple(tp, adim, n + 1);
    // ε(a₁)·f(a₂⊗⋯⊗a_{n+1}).
    Scalar e = A.counit(a[0]);
    if (!e.is_zero()) {
      long tail = encode_tuple(a, adim, 0, 1);
      for (int v = 0; v < dv; ++v)
        D.add(static_cast<int>(v * Sn1 + tp), static_cast<int>(v * Sn + tail), e);
    }
    // Σᵢ (−1)ⁱ f(⋯ aᵢa_{i+1} ⋯).
    for (int i = 0; i < n; ++i) {
      Scalar sign(i % 2 == 0 ? -1 : 1);
      for (const auto& [m, cm] : A.mult(a[static_cast<size_t>(i)], a[static_cast<size_t>(i) + 1])) {
        long merged = encode_tuple(a, adim, i, 2, m);
        Scalar c = sign * cm;
        for (int v = 0; v < dv; ++v)
          D.add(static_cast<int>(v * Sn1 + tp), static_cast<int>(v * Sn + merged), c);
      }
    }
    // (−1)^{n+1} f(a₁⊗⋯⊗aₙ) ← a_{n+1}.
    long head = tp / adim;
    for (int v = 0; v < dv; ++v)
      for (const auto& [w, cw] : V.act(v, a[static_cast<size_t>(n)]))
        D.add(static_cast<int>(w * Sn1 + tp), static_cast<int>(v * Sn + head), sign_last * cw);
  }
  return D;
}

ComplexWithBases gs_complex(const HopfAlgebra& A, const YDModule& V, int N, long budget) {
  if (N < 1) throw ValidationError("GS complex needs max degree N >= 1");
  if (!A.finite_dimensional())
    throw ValidationError("GS complex is materialized only for finite-dimensional algebras");
  if (!A.cosemisimple())
    throw ValidationError("GS complex requires a cosemisimple algebra (Haar integral)");
  long size = 1;
  for (int t = 0; t < N + 1; ++t) {
    size *= A.dim();
    if (size > budget) {
      std::ostringstream os;
      os << "size budget exceeded: |basis|^(N+1) = " << A.dim() << "^" << (N + 1) << " > "
         << budget;
      throw BudgetExceededError(os.str());
    }
  }

  std::vector<HomSpaceBasis> terms;
  std::vector<int> dims;
  Comodule W = V.as_comodule();
  for (int n = 0; n <= N + 1; ++n) {
    HomSpaceBasis basis = colinear_hom(coad_power(A, n).as_comodule(), W);
    basis.description = "Hom^" + A.name() + "(" + A.name() + "^(" + std::to_string(n) + "), " +
                        V.name + ")";
    dims.push_back(basis.dim());
    terms.push_back(std::move(basis));
  }
  std::vector<SparseMatrix> diffs;
  for (int n = 0; n <= N; ++n) {
    SparseMatrix ambient = gs_ambient_differential(A, V, n);
    std::vector<SparseVec> cols;
    for (int j = 0; j < terms[static_cast<size_t>(n)].dim(); ++j)
      cols.push_back(terms[static_cast<size_t>(n) + 1].coordinates(
          ambient.apply(terms[static_cast<size_t>(n)].vectors[static_cast<size_t>(j)])));
    diffs.push_back(SparseMatrix::from_columns(cols, dims[static_cast<size_t>(n) + 1]));
  }
  return ComplexWithBases{CochainComplex(std::move(dims), std::move(diffs)), std::move(terms)};
}

SparseMatrix hochschild_differential(const HopfAlgebra& A, const Bimodule& M, int n) {
  if (n < 0) throw ValidationError("differential degree must be >= 0");
  const int adim = A.dim();
  const int dm = M.dim;
  const long Sn = power_dim(adim, n);
  const long Sn1 = Sn * adim;
  const Scalar sign_last((n + 1) % 2 == 0 ? 1 : -1);

  // Twist matrices Tw_b = Σ L(S(b₍₁₎))·R(b₍₂₎) acting on M.
  std::vector<SparseMatrix> tw;
  for (int b = 0; b < adim; ++b) {
    SparseMatrix T(dm, dm);
    for (const auto& [pq, c] : A.comul(b)) {
      SparseVec sp = A.antipode(pq.first);
      for (int m = 0; m < dm; ++m) {
        SparseVec col = M.act_left(sp, M.act_right(SparseVec{{m, Scalar(1)}},
                                                   SparseVec{{pq.second, Scalar(1)}}));
        for (const auto& [w, cw] : col) T.add(w, m, c * cw);
      }
    }
    tw.push_back(std::move(T));
  }

  SparseMatrix D(static_cast<int>(dm * Sn1), static_cast<int>(dm * Sn));
  for (long tp = 0; tp < Sn1; ++tp) {
    std::vector<int> a = decode_tuple(tp, adim, n + 1);
    Scalar e = A.counit(a[0]);
    if (!e.is_zero()) {
      long tail = encode_tuple(a, adim, 0, 1);
      for (int m = 0; m < dm; ++m)
        D.add(static_cast<int>(m * Sn1 + tp), static_cast<int>(m * Sn + tail), e);
    }
    for (int i = 0; i < n; ++i) {
      Scalar sign(i % 2 == 0 ? -1 : 1);
      for (const auto& [x, cx] : A.mult(a[static_cast<size_t>(i)], a[static_cast<size_t>(i) + 1])) {
        long merged = encode_tuple(a, adim, i, 2, x);
        Scalar c = sign * cx;
        for (int m = 0; m < dm; ++m)
          D.add(static_cast<int>(m * Sn1 + tp), static_cast<int>(m * Sn + merged), c);
      }
    }
    long head = tp / adim;
    const SparseMatrix& T = tw[static_cast<size_t>(a[static_cast<size_t>(n)])];
    for (int w = 0; w < dm; ++w)
      for (const auto& [m, c] : T.row(w))
        D.add(static_cast<int>(w * Sn1 + tp), static_cast<int>(m * Sn + head), sign_last * c);
  }
  return D;
}

CochainComplex hochschild_complex(const HopfAlgebra& A, const Bimodule& M, int N) {
  if (N < 1) throw ValidationError("Hochschild complex needs max degree N >= 1");
  if (!A.finite_dimensional())
    throw ValidationError("Hochschild complex requires a finite-dimensional algebra");
  std::vector<int> dims;
  for (int n = 0; n <= N + 1; ++n) dims.push_back(static_cast<int>(M.dim * power_dim(A.dim(), n)));
  std::vector<SparseMatrix> diffs;
  for (int n = 0; n <= N; ++n) diffs.push_back(hochschild_differential(A, M, n));
  return CochainComplex(std::move(dims), std::move(diffs));
}

HomotopyReport hochschild_homotopy_check(const HopfAlgebra& A, const Bimodule& M, int N,
                                         const SparseVec& integral) {
  HomotopyReport rep;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    if (rep.failures.size() < 8) rep.failures.push_back(std::move(msg));
  };
  // Two-sided ε-normalized integral: a·t = ε(a)·t = t·a, ε(t) = 1.
  if (A.counit(integral) != Scalar(1)) fail("integral is not counit-normalized");
  for (int a = 0; a < A.dim(); ++a) {
    SparseVec want;
    Scalar e = A.counit(a);
    for (const auto& [i, c] : integral)
      if (!(e * c).is_zero()) want[i] = e * c;
    if (A.mult(SparseVec{{a, Scalar(1)}}, integral) != want)
      fail("a·t != eps(a)t at basis element " + A.basis_name(a));
    if (A.mult(integral, SparseVec{{a, Scalar(1)}}) != want)
      fail("t·a != eps(a)t at basis element " + A.basis_name(a));
  }

  const int adim = A.dim();
  const int dm = M.dim;
  // s(g)(a₁⊗⋯⊗aₙ) = g(t⊗a₁⊗⋯⊗aₙ) as a matrix C^{n+1} -> C^n.
  auto slice = [&](int n) {
    const long Sn = power_dim(adim, n);
    SparseMatrix S(static_cast<int>(dm * Sn), static_cast<int>(dm * Sn * adim));
    for (long t = 0; t < Sn; ++t)
      for (const auto& [x, cx] : integral)
        for (int m = 0; m < dm; ++m)
          S.add(static_cast<int>(m * Sn + t), static_cast<int>(m * Sn * adim + x * Sn + t), cx);
    return S;
  };

  std::vector<SparseMatrix> D, S;
  for (int n = 0; n <= N; ++n) {
    D.push_back(hochschild_differential(A, M, n));
    S.push_back(slice(n));
  }
  for (int n = 1; n <= N; ++n) {
    ++rep.degrees_checked;
    SparseMatrix lhs = S[static_cast<size_t>(n)] * D[static_cast<size_t>(n)];
    SparseMatrix comp =
        D[static_cast<size_t>(n) - 1] * S[static_cast<size_t>(n) - 1];
    for (int r = 0; r < lhs.rows(); ++r)
      for (const auto& [c, v] : comp.row(r)) lhs.add(r, c, v);
    if (!(lhs == SparseMatrix::identity(lhs.rows())))
      fail("sD + Ds != id in degree " + std::to_string(n));
  }
  return rep;
}

SparseMatrix average_map(const Comodule& X, const Comodule& W, const SparseMatrix& f) {
  if (f.rows() != W.dim || f.cols() != X.dim)
    throw ValidationError("averaging: map shape does not match the comodules");
  const HopfAlgebra& A = *X.alg;
  SparseMatrix out(W.dim, X.dim);
  std::vector<std::vector<std::pair<int, SparseVec>>> wco;
  for (int k = 0; k < W.dim; ++k) wco.push_back(W.coaction(k));
  for (int j = 0; j < X.dim; ++j) {
    for (const auto& [j0, cx] : X.coaction(j)) {
      SparseVec scx = A.antipode(cx);
      for (int k = 0; k < W.dim; ++k) {
        Scalar val = f.get(k, j0);
        if (val.is_zero()) continue;
        for (const auto& [k0, cw] : wco[static_cast<size_t>(k)]) {
          Scalar h = A.haar(A.mult(cw, scx));
          if (!h.is_zero()) out.add(k0, j, val * h);
        }
      }
    }
  }
  return out;
}

SparseVec average_flat(const Comodule& X, const Comodule& W, const SparseVec& f) {
  SparseMatrix m(W.dim, X.dim);
  for (const auto& [key, c] : f) m.add(key / X.dim, key % X.dim, c);
  SparseMatrix avg = average_map(X, W, m);
  SparseVec out;
  for (int k = 0; k < W.dim; ++k)
    for (const auto& [j, c] : avg.row(k)) out[k * X.dim + j] = c;
  return out;
}

AveragingReport check_averaging(const HopfAlgebra& A, const YDModule& V, int n, int samples,
                                uint64_t seed) {
  AveragingReport rep;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    if (rep.failures.size() < 8) rep.failures.push_back(std::move(msg));
  };
  Comodule X = coad_power(A, n).as_comodule();
  Comodule Xup = coad_power(A, n + 1).as_comodule();
  Comodule W = V.as_comodule();
  HomSpaceBasis colinear = colinear_hom(X, W);
  SparseMatrix D = gs_ambient_differential(A, V, n);
  const long ambient = static_cast<long>(W.dim) * X.dim;

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    ++rep.cochains_tested;
    SparseVec f;
    for (long key = 0; key < ambient; ++key) {
      long pick = static_cast<long>(rng() % 7) - 3;
      if (pick != 0) f[static_cast<int>(key)] = Scalar(pick);
    }
    SparseVec mf = average_flat(X, W, f);
    // Image is colinear.
    bool in_span = true;
    try {
      (void)colinear.coordinates(mf);
    } catch (const std::domain_error&) {
      in_span = false;
    }
    if (!in_span) fail("M(f) not colinear at sample " + std::to_string(s));
    // Idempotence.
    if (average_flat(X, W, mf) != mf) fail("M(M(f)) != M(f) at sample " + std::to_string(s));
    // ∂M = M∂.
    SparseVec lhs = D.apply(mf);
    SparseVec rhs = average_flat(Xup, W, D.apply(f));
    if (lhs != rhs) fail("dM(f) != M(df) at sample " + std::to_string(s));
    // M(f) = f iff f colinear: forward on a colinear sample, converse on f.
    if (mf != f) {
      bool f_colinear = true;
      try {
        (void)colinear.coordinates(f);
      } catch (const std::domain_error&) {
        f_colinear = false;
      }
      if (f_colinear) fail("colinear f with M(f) != f at sample " + std::to_string(s));
    }
    SparseVec g;
    for (int j = 0; j < colinear.dim(); ++j) {
      long pick = static_cast<long>(rng() % 7) - 3;
      if (pick != 0) axpy(g, Scalar(pick), colinear.vectors[static_cast<size_t>(j)]);
    }
    if (average_flat(X, W, g) != g) fail("M not identity on a colinear cochain, sample " +
                                         std::to_string(s));
  }
  return rep;
}

EquivalenceReport gs_equals_hochschild_check(const HopfAlgebra& A, const Bimodule& M, int N,
                                             long budget) {
  EquivalenceReport rep;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    if (rep.failures.size() < 8) rep.failures.push_back(std::move(msg));
  };
  YDModule V = twist_bimodule(M);
  ComplexWithBases gs = gs_complex(A, V, N, budget);
  CochainComplex hoch = hochschild_complex(A, M, N);
  rep.gs_dims = gs.complex.dims();
  rep.hoch_dims = hoch.dims();
  if (rep.gs_dims != rep.hoch_dims) fail("cochain dimensions disagree");

  const int adim = A.dim();
  // Φ_n(f) = (id_M ⊗ ε)∘f in the term basis; key m·|A|ⁿ + t downstairs.
  std::vector<SparseMatrix> phi;
  for (int n = 0; n <= N + 1; ++n) {
    const long Sn = power_dim(adim, n);
    const HomSpaceBasis& term = gs.terms[static_cast<size_t>(n)];
    SparseMatrix P(static_cast<int>(M.dim * Sn), term.dim());
    for (int j = 0; j < term.dim(); ++j)
      for (const auto& [key, c] : term.vectors[static_cast<size_t>(j)]) {
        long t = key % Sn;
        int carrier = static_cast<int>(key / Sn);
        int m = carrier / adim;
        Scalar e = A.counit(carrier % adim);
        if (!e.is_zero()) P.add(static_cast<int>(m * Sn + t), j, c * e);
      }
    if (P.rows() != P.cols() || rank(P) != P.rows())
      fail("coordinate map is not an isomorphism in degree " + std::to_string(n));
    phi.push_back(std::move(P));
  }
  for (int n = 0; n <= N; ++n) {
    SparseMatrix lhs = phi[static_cast<size_t>(n) + 1] * gs.complex.differentials()[static_cast<size_t>(n)];
    SparseMatrix rhs = hoch.differentials()[static_cast<size_t>(n)] * phi[static_cast<size_t>(n)];
    if (!(lhs == rhs)) fail("coordinate map does not commute with d in degree " + std::to_string(n));
  }
  rep.gs_homology = gs.complex.homology_dims();
  rep.hoch_homology = hoch.homology_dims();
  for (int i = 0; i <= N; ++i)
    if (rep.gs_homology[static_cast<size_t>(i)] != rep.hoch_homology[static_cast<size_t>(i)])
      fail("homology dimensions disagree in degree " + std::to_string(i));
  return rep;
}

}  // namespace hopfgs
