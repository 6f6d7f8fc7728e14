#include "hopfgs/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hopfgs {

void axpy(SparseVec& v, const Scalar& c, const SparseVec& w) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : w) {
    auto it = v.find(i);
    if (it == v.end()) {
      Scalar t = c * x;
      if (!t.is_zero()) v.emplace(i, std::move(t));
    } else {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), rows_data_(rows) {
  if (rows < 0 || cols < 0) throw std::out_of_range("negative matrix dimension");
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
  if (v.is_zero())
    rows_data_[r].erase(c);
  else
    rows_data_[r][c] = v;
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
  auto& row = rows_data_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    if (!v.is_zero()) row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

Scalar SparseMatrix::get(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  auto it = rows_data_[r].find(c);
  return it == rows_data_[r].end() ? Scalar(0) : it->second;
}

long SparseMatrix::nnz() const {
  long n = 0;
  for (const auto& r : rows_data_) n += static_cast<long>(r.size());
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : rows_data_[r]) t.rows_data_[c].emplace(r, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::domain_error("matrix product shape mismatch");
  SparseMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    SparseVec& acc = out.rows_data_[r];
    for (const auto& [k, v] : rows_data_[r]) axpy(acc, v, o.rows_data_[k]);
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("matrix difference shape mismatch");
  SparseMatrix out = *this;
  for (int r = 0; r < rows_; ++r) axpy(out.rows_data_[r], Scalar(-1), o.rows_data_[r]);
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && rows_data_ == o.rows_data_;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : rows_data_)
    if (!r.empty()) return false;
  return true;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  SparseVec out;
  for (int r = 0; r < rows_; ++r) {
    Scalar acc(0);
    const auto& row = rows_data_[r];
    // iterate over the sparser of the two
    if (row.size() <= x.size()) {
      for (const auto& [c, v] : row) {
        auto it = x.find(c);
        if (it != x.end()) acc += v * it->second;
      }
    } else {
      for (const auto& [c, v] : x) {
        auto it = row.find(c);
        if (it != row.end()) acc += it->second * v;
      }
    }
    if (!acc.is_zero()) out.emplace(r, std::move(acc));
  }
  return out;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

SparseMatrix SparseMatrix::from_columns(const std::vector<SparseVec>& cols, int rows) {
  SparseMatrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c)
    for (const auto& [r, v] : cols[c]) m.set(r, c, v);
  return m;
}

nlohmann::json SparseMatrix::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : rows_data_[r])
      entries.push_back(nlohmann::json::array({r, c, v.str()}));
  return nlohmann::json{{"rows", rows_}, {"cols", cols_}, {"entries", entries}};
}

SparseMatrix SparseMatrix::from_json(const nlohmann::json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix JSON needs rows/cols/entries");
  SparseMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [row, col, \"scalar\"]");
    m.set(e.at(0).get<int>(), e.at(1).get<int>(), Scalar::parse(e.at(2).get<std::string>()));
  }
  return m;
}

SparseMatrix SparseMatrix::substitute_q(const Rational& point) const {
  SparseMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : rows_data_[r]) out.set(r, c, v.substitute_q(point));
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination
// ---------------------------------------------------------------------------
namespace {

/// Scale a row so all entries live in the base ring (integers / polynomials),
/// then divide out the content. Exactness is preserved: scaling a row changes
/// neither rank nor kernel.
void normalize_row(SparseVec& row) {
  if (row.empty()) return;
  bool symbolic = false;
  for (const auto& [c, v] : row)
    if (!v.is_rational()) {
      symbolic = true;
      break;
    }
  if (!symbolic) {
    // clear denominators, divide by gcd of numerators
    BigInt den_lcm = 1;
    for (const auto& [c, v] : row)
      den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(v.as_rational()));
    BigInt num_gcd = 0;
    std::vector<BigInt> nums;
    nums.reserve(row.size());
    for (const auto& [c, v] : row) {
      const Rational& r = v.as_rational();
      BigInt n = boost::multiprecision::numerator(r) * (den_lcm / boost::multiprecision::denominator(r));
      num_gcd = boost::multiprecision::gcd(num_gcd, n);
      nums.push_back(std::move(n));
    }
    size_t i = 0;
    for (auto& [c, v] : row) v = Scalar(Rational(nums[i++] / num_gcd));
  } else {
    // polynomial row: clear polynomial denominators, divide by monic poly gcd
    Polynomial den_lcm(Rational(1));
    for (const auto& [c, v] : row) {
      const Polynomial d = v.as_fraction().den;
      den_lcm = den_lcm * d.exact_div(Polynomial::gcd(den_lcm, d));
    }
    std::vector<Polynomial> nums;
    nums.reserve(row.size());
    Polynomial content;
    for (const auto& [c, v] : row) {
      const RationalFunction f = v.as_fraction();
      Polynomial n = f.num * den_lcm.exact_div(f.den);
      content = Polynomial::gcd(content, n);
      nums.push_back(std::move(n));
    }
    size_t i = 0;
    for (auto& [c, v] : row) v = Scalar(nums[i++].exact_div(content), Polynomial(Rational(1)));
  }
}

struct Eliminator {
  int rows, cols;
  std::vector<SparseVec> work;
  std::vector<bool> used;                 // row consumed as a pivot
  std::vector<std::vector<int>> col_rows; // candidate row ids per column (lazily stale)

  explicit Eliminator(const SparseMatrix& m)
      : rows(m.rows()), cols(m.cols()), work(rows), used(rows, false), col_rows(cols) {
    for (int r = 0; r < rows; ++r) {
      work[r] = m.row(r);
      normalize_row(work[r]);
      for (const auto& [c, v] : work[r]) col_rows[c].push_back(r);
    }
  }

  /// Pinned pivot rule: smallest column first; sparsest candidate row, ties by
  /// smallest row index.
  int choose_pivot_row(int c) {
    int best = -1;
    size_t best_nnz = 0;
    auto& cand = col_rows[c];
    size_t w = 0;
    for (size_t i = 0; i < cand.size(); ++i) {
      const int r = cand[i];
      if (used[r] || !work[r].count(c)) continue;  // stale entry
      cand[w++] = r;
      if (best < 0 || work[r].size() < best_nnz) {
        best = r;
        best_nnz = work[r].size();
      }
    }
    cand.resize(w);
    return best;
  }

  /// Run the elimination; returns pivot columns in increasing order.
  std::vector<int> run() {
    std::vector<int> pivots;
    for (int c = 0; c < cols; ++c) {
      const int p = choose_pivot_row(c);
      if (p < 0) continue;
      pivots.push_back(c);
      used[p] = true;
      const Scalar pv = work[p].at(c);
      for (const int r : col_rows[c]) {
        if (used[r]) continue;
        auto it = work[r].find(c);
        if (it == work[r].end()) continue;
        const Scalar a = it->second;
        // fraction-free update: row_r <- row_r * pv - a * row_p, then content-normalize
        for (auto& [cc, v] : work[r]) v *= pv;
        axpy(work[r], -a, work[p]);
        normalize_row(work[r]);
        for (const auto& [cc, v] : work[r])
          if (cc > c) col_rows[cc].push_back(r);
      }
      col_rows[c].clear();
      col_rows[c].push_back(p);
    }
    return pivots;
  }
};

}  // namespace

Echelon eliminate(const SparseMatrix& m) {
  Eliminator e(m);
  Echelon out;
  out.pivot_cols = e.run();
  out.rank = static_cast<int>(out.pivot_cols.size());
  return out;
}

int rank(const SparseMatrix& m) { return eliminate(m).rank; }

std::vector<int> free_columns(const SparseMatrix& m) {
  const Echelon e = eliminate(m);
  std::vector<int> free;
  size_t pi = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (pi < e.pivot_cols.size() && e.pivot_cols[pi] == c)
      ++pi;
    else
      free.push_back(c);
  }
  return free;
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  Eliminator e(m);
  const std::vector<int> pivots = e.run();

  // pivot row per pivot column
  std::map<int, int> pivot_row;  // col -> row id
  for (const int c : pivots) pivot_row[c] = e.col_rows[c].front();

  std::vector<int> free;
  {
    size_t pi = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (pi < pivots.size() && pivots[pi] == c)
        ++pi;
      else
        free.push_back(c);
    }
  }

  std::vector<SparseVec> basis;
  basis.reserve(free.size());
  for (const int f : free) {
    SparseVec x;
    x.emplace(f, Scalar(1));
    // back-substitute pivot variables in decreasing pivot-column order; each
    // pivot row's support is {pivot col} ∪ later columns, so this is triangular.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const int pc = *it;
      if (pc > f && pc > (x.empty() ? -1 : x.rbegin()->first)) continue;
      const SparseVec& row = e.work[pivot_row[pc]];
      Scalar acc(0);
      for (const auto& [c, v] : row) {
        if (c == pc) continue;
        auto xi = x.find(c);
        if (xi != x.end()) acc += v * xi->second;
      }
      if (!acc.is_zero()) x[pc] = -acc / row.at(pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

SparseVec coordinates_in_normalized_basis(const std::vector<SparseVec>& basis,
                                          const std::vector<int>& free_cols,
                                          const SparseVec& v) {
  if (basis.size() != free_cols.size())
    throw std::domain_error("basis/free-column size mismatch");
  SparseVec coords;
  SparseVec reconstructed;
  for (size_t j = 0; j < basis.size(); ++j) {
    auto it = v.find(free_cols[j]);
    if (it == v.end()) continue;
    coords.emplace(static_cast<int>(j), it->second);
    axpy(reconstructed, it->second, basis[j]);
  }
  axpy(reconstructed, Scalar(-1), v);
  if (!reconstructed.empty())
    throw std::domain_error("vector does not lie in the span of the given basis");
  return coords;
}

}  // namespace hopfgs
