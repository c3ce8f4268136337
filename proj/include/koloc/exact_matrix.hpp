#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "koloc/rational.hpp"

namespace koloc {

using RatVec = std::vector<Rat>;

// Exact rational matrix with row-sparse storage. Dense semantics, sparse
// friendly: desk-scale dimensions but up to ~512 for the big representation
// checks, where rows carry only a handful of entries.
class ExactMat {
 public:
  ExactMat() : rows_(0), cols_(0) {}
  ExactMat(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static ExactMat identity(int n) {
    ExactMat m(n, n);
    for (int i = 0; i < n; ++i) m.row_[i].emplace(i, 1);
    return m;
  }

  static ExactMat diag(const RatVec& d) {
    ExactMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows_; ++i)
      if (!is_zero(d[i])) m.row_[i].emplace(i, d[i]);
    return m;
  }

  static ExactMat from_rows(const std::vector<RatVec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMat m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
      for (int j = 0; j < c; ++j)
        if (!is_zero(rows[i][j])) m.row_[i].emplace(j, rows[i][j]);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& at(int i, int j) const {
    static const Rat kZero = 0;
    auto it = row_[i].find(j);
    return it == row_[i].end() ? kZero : it->second;
  }

  void set(int i, int j, const Rat& v) {
    if (is_zero(v))
      row_[i].erase(j);
    else
      row_[i][j] = v;
  }

  void add_to(int i, int j, const Rat& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = row_[i].emplace(j, v);
    if (!inserted) {
      it->second += v;
      if (is_zero(it->second)) row_[i].erase(it);
    }
  }

  const std::map<int, Rat>& row(int i) const { return row_[i]; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (auto& r : row_) n += r.size();
    return n;
  }

  bool operator==(const ExactMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
  }
  bool operator!=(const ExactMat& o) const { return !(*this == o); }

  bool is_zero_matrix() const {
    for (auto& r : row_)
      if (!r.empty()) return false;
    return true;
  }

  ExactMat operator+(const ExactMat& o) const {
    check_same_shape(o);
    ExactMat m = *this;
    for (int i = 0; i < rows_; ++i)
      for (auto& [j, v] : o.row_[i]) m.add_to(i, j, v);
    return m;
  }

  ExactMat operator-(const ExactMat& o) const {
    check_same_shape(o);
    ExactMat m = *this;
    for (int i = 0; i < rows_; ++i)
      for (auto& [j, v] : o.row_[i]) m.add_to(i, j, -v);
    return m;
  }

  ExactMat operator-() const {
    ExactMat m = *this;
    for (auto& r : m.row_)
      for (auto& [j, v] : r) v = -v;
    return m;
  }

  ExactMat operator*(const Rat& s) const {
    if (is_zero(s)) return ExactMat(rows_, cols_);
    ExactMat m = *this;
    for (auto& r : m.row_)
      for (auto& [j, v] : r) v *= s;
    return m;
  }

  ExactMat operator*(const ExactMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ExactMat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (auto& [k, a] : row_[i])
        for (auto& [j, b] : o.row_[k]) m.add_to(i, j, a * b);
    return m;
  }

  RatVec operator*(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matvec shape mismatch");
    RatVec y(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
      for (auto& [j, a] : row_[i]) y[i] += a * x[j];
    return y;
  }

  ExactMat transpose() const {
    ExactMat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (auto& [j, v] : row_[i]) m.row_[j].emplace(i, v);
    return m;
  }

  Rat trace() const {
    Rat t = 0;
    int n = std::min(rows_, cols_);
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }

  static ExactMat kron(const ExactMat& a, const ExactMat& b) {
    ExactMat m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (auto& [j, av] : a.row_[i])
        for (int p = 0; p < b.rows_; ++p)
          for (auto& [q, bv] : b.row_[p]) m.row_[i * b.rows_ + p].emplace(j * b.cols_ + q, av * bv);
    return m;
  }

  static ExactMat direct_sum(const ExactMat& a, const ExactMat& b) {
    ExactMat m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) m.row_[i] = a.row_[i];
    for (int i = 0; i < b.rows_; ++i)
      for (auto& [j, v] : b.row_[i]) m.row_[a.rows_ + i].emplace(a.cols_ + j, v);
    return m;
  }

  // Horizontal concatenation [A | B].
  static ExactMat hcat(const ExactMat& a, const ExactMat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hcat row mismatch");
    ExactMat m(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      m.row_[i] = a.row_[i];
      for (auto& [j, v] : b.row_[i]) m.row_[i].emplace(a.cols_ + j, v);
    }
    return m;
  }

  ExactMat columns(const std::vector<int>& idx) const {
    std::map<int, int> pos;
    for (int k = 0; k < static_cast<int>(idx.size()); ++k) pos[idx[k]] = k;
    ExactMat m(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
      for (auto& [j, v] : row_[i]) {
        auto it = pos.find(j);
        if (it != pos.end()) m.row_[i].emplace(it->second, v);
      }
    return m;
  }

  RatVec column(int j) const {
    RatVec c(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  // Echelon basis of the column space, as columns of the returned matrix.
  ExactMat column_space() const {
    ExactMat t = transpose();
    t.rref();
    std::vector<RatVec> rows;
    for (int i = 0; i < t.rows_; ++i)
      if (!t.row_[i].empty()) {
        RatVec r(t.cols_, Rat(0));
        for (auto& [j, v] : t.row_[i]) r[j] = v;
        rows.push_back(std::move(r));
      }
    return from_rows(rows).transpose();
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int pr = 0;
    for (int col = 0; col < cols_ && pr < rows_; ++col) {
      int best = -1;
      std::size_t best_nnz = 0;
      for (int i = pr; i < rows_; ++i) {
        auto it = row_[i].find(col);
        if (it != row_[i].end()) {
          if (best < 0 || row_[i].size() < best_nnz) {
            best = i;
            best_nnz = row_[i].size();
          }
        }
      }
      if (best < 0) continue;
      std::swap(row_[pr], row_[best]);
      Rat inv = 1 / row_[pr][col];
      if (inv != 1)
        for (auto& [j, v] : row_[pr]) v *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == pr) continue;
        auto it = row_[i].find(col);
        if (it == row_[i].end()) continue;
        Rat f = it->second;
        for (auto& [j, v] : row_[pr]) add_to(i, j, -f * v);
      }
      pivots.push_back(col);
      ++pr;
    }
    return pivots;
  }

  int rank() const {
    ExactMat m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of the right nullspace, as columns of the returned matrix.
  ExactMat nullspace() const {
    ExactMat m = *this;
    std::vector<int> piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
    ExactMat basis(cols_, static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
      int fc = free_cols[k];
      basis.set(fc, k, 1);
      for (int p = 0; p < static_cast<int>(piv.size()); ++p) {
        const Rat& v = m.at(p, fc);
        if (!is_zero(v)) basis.set(piv[p], k, -v);
      }
    }
    return basis;
  }

  // Solves A X = B exactly; throws if inconsistent or A rank-deficient on the
  // columns needed (requires unique solution given full column rank of A).
  static ExactMat solve(const ExactMat& a, const ExactMat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("solve shape mismatch");
    ExactMat aug = hcat(a, b);
    std::vector<int> piv = aug.rref();
    for (int c : piv)
      if (c >= a.cols_) throw std::domain_error("inconsistent linear system");
    if (static_cast<int>(piv.size()) != a.cols_)
      throw std::domain_error("linear system without unique solution");
    ExactMat x(a.cols_, b.cols_);
    for (int p = 0; p < a.cols_; ++p)
      for (auto& [j, v] : aug.row_[p])
        if (j >= a.cols_) x.row_[p].emplace(j - a.cols_, v);
    return x;
  }

  ExactMat inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    return solve(*this, identity(rows_));
  }

  Rat det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    ExactMat m = *this;
    Rat d = 1;
    for (int col = 0; col < cols_; ++col) {
      int best = -1;
      for (int i = col; i < rows_; ++i)
        if (m.row_[i].count(col)) {
          best = i;
          break;
        }
      if (best < 0) return Rat(0);
      if (best != col) {
        std::swap(m.row_[best], m.row_[col]);
        d = -d;
      }
      Rat p = m.row_[col][col];
      d *= p;
      for (int i = col + 1; i < rows_; ++i) {
        auto it = m.row_[i].find(col);
        if (it == m.row_[i].end()) continue;
        Rat f = it->second / p;
        for (auto& [j, v] : m.row_[col])
          if (j >= col) m.add_to(i, j, -f * v);
      }
    }
    return d;
  }

  ExactMat eigenspace(const Rat& lambda) const {
    if (rows_ != cols_) throw std::invalid_argument("eigenspace of non-square matrix");
    ExactMat shifted = *this;
    for (int i = 0; i < rows_; ++i) shifted.add_to(i, i, -lambda);
    return shifted.nullspace();
  }

  bool anticommutes_with(const ExactMat& o) const {
    return ((*this) * o + o * (*this)).is_zero_matrix();
  }
  bool commutes_with(const ExactMat& o) const {
    return ((*this) * o - o * (*this)).is_zero_matrix();
  }

 private:
  void check_same_shape(const ExactMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<std::map<int, Rat>> row_;
};

// Dimension of the solution space of X A_i = A_i X for all given A_i and
// X G = G X for the given involutions; unknown X is n x n.
inline int commutant_dimension(const std::vector<ExactMat>& mats, int n) {
  std::vector<ExactMat> rows;
  // Build the stacked linear system row by row: (A X - X A)_{ij} = 0.
  // Unknown vector indexes X row-major.
  ExactMat sys(0, 0);
  int eqs = 0;
  for (auto& a : mats) eqs += n * n;
  ExactMat m(eqs, n * n);
  int r = 0;
  for (auto& a : mats) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // (A X)_{ij} = sum_k A_{ik} X_{kj};  (X A)_{ij} = sum_k X_{ik} A_{kj}
        for (auto& [k, v] : a.row(i)) m.add_to(r, k * n + j, v);
        for (int k = 0; k < n; ++k) {
          const Rat& v = a.at(k, j);
          if (!is_zero(v)) m.add_to(r, i * n + k, -v);
        }
        ++r;
      }
  }
  return n * n - m.rank();
}

}  // namespace koloc
