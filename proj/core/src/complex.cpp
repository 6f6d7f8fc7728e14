#include "hopfgs/complex.hpp"

#include <stdexcept>

namespace hopfgs {

CochainComplex::CochainComplex(std::vector<int> dims, std::vector<SparseMatrix> differentials) {
  dims_ = std::move(dims);
  diffs_ = std::move(differentials);
  validate_shapes();
  const auto failures = d_squared_check();
  if (!failures.empty()) {
    const auto& f = failures.front();
    throw std::domain_error("d∘d != 0 at position " + std::to_string(f.position) + ": entry (" +
                            std::to_string(f.row) + "," + std::to_string(f.col) + ") = " + f.value);
  }
}

CochainComplex CochainComplex::unchecked(std::vector<int> dims,
                                         std::vector<SparseMatrix> differentials) {
  CochainComplex c;
  c.dims_ = std::move(dims);
  c.diffs_ = std::move(differentials);
  c.validate_shapes();
  return c;
}

void CochainComplex::validate_shapes() const {
  if (dims_.empty()) throw std::domain_error("complex needs at least one term");
  if (diffs_.size() + 1 != dims_.size())
    throw std::domain_error("complex with " + std::to_string(dims_.size()) + " terms needs " +
                            std::to_string(dims_.size() - 1) + " differentials");
  for (size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].rows() != dims_[i + 1] || diffs_[i].cols() != dims_[i])
      throw std::domain_error("differential " + std::to_string(i) + " has shape " +
                              std::to_string(diffs_[i].rows()) + "x" + std::to_string(diffs_[i].cols()) +
                              ", expected " + std::to_string(dims_[i + 1]) + "x" + std::to_string(dims_[i]));
  }
}

std::vector<CompositionFailure> CochainComplex::d_squared_check() const {
  std::vector<CompositionFailure> failures;
  for (size_t i = 0; i + 1 < diffs_.size(); ++i) {
    const SparseMatrix prod = diffs_[i + 1] * diffs_[i];
    if (prod.is_zero()) continue;
    for (int r = 0; r < prod.rows(); ++r) {
      if (prod.row(r).empty()) continue;
      const auto& [c, v] = *prod.row(r).begin();
      failures.push_back({static_cast<int>(i), r, c, v.str()});
      break;
    }
  }
  return failures;
}

std::vector<int> CochainComplex::ranks() const {
  std::vector<int> out;
  out.reserve(diffs_.size());
  for (const auto& d : diffs_) out.push_back(rank(d));
  return out;
}

std::vector<int> CochainComplex::homology_dims() const {
  const std::vector<int> rk = ranks();
  std::vector<int> h(dims_.size());
  for (size_t i = 0; i < dims_.size(); ++i) {
    const int rank_in = i == 0 ? 0 : rk[i - 1];
    const int rank_out = i < rk.size() ? rk[i] : 0;
    h[i] = dims_[i] - rank_out - rank_in;  // dim ker d_i - rank d_{i-1}
  }
  return h;
}

}  // namespace hopfgs
