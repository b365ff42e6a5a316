#include "spinmon/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace spinmon {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<CycNumber>>& m, int ncols) {
  std::vector<int> pivots;
  int nrows = static_cast<int>(m.size());
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int piv = -1;
    for (int r = row; r < nrows; ++r) {
      if (!m[r][col].is_zero()) {
        piv = r;
        if (m[r][col].is_rational()) break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    CycNumber inv = m[row][col].inv();
    for (int j = col; j < static_cast<int>(m[row].size()); ++j)
      if (!m[row][j].is_zero()) m[row][j] = m[row][j] * inv;
    std::vector<int> nz;
    for (int j = col; j < static_cast<int>(m[row].size()); ++j)
      if (!m[row][j].is_zero()) nz.push_back(j);
    for (int r = 0; r < nrows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      CycNumber f = m[r][col];
      for (int j : nz) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<CycNumber>> to_rows(const Matrix& a, const Matrix* b) {
  std::vector<std::vector<CycNumber>> m(a.rows());
  int extra = b ? b->cols() : 0;
  for (int i = 0; i < a.rows(); ++i) {
    m[i].resize(a.cols() + extra);
    for (int j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
    for (int j = 0; j < extra; ++j) m[i][a.cols() + j] = b->at(i, j);
  }
  return m;
}

}  // namespace

Matrix Matrix::identity(int n, const CycNumber& s) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix res(r_, o.c_);
  std::vector<std::vector<int>> onz(o.r_);
  for (int k = 0; k < o.r_; ++k)
    for (int j = 0; j < o.c_; ++j)
      if (!o.at(k, j).is_zero()) onz[k].push_back(j);
  for (int i = 0; i < r_; ++i) {
    for (int k = 0; k < c_; ++k) {
      const CycNumber& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j : onz[k]) res.at(i, j) += x * o.at(k, j);
    }
  }
  return res;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in sum");
  Matrix res = *this;
  for (size_t i = 0; i < a_.size(); ++i) res.a_[i] += o.a_[i];
  return res;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in difference");
  Matrix res = *this;
  for (size_t i = 0; i < a_.size(); ++i) res.a_[i] -= o.a_[i];
  return res;
}

Matrix Matrix::operator-() const {
  Matrix res = *this;
  for (auto& x : res.a_) x = -x;
  return res;
}

Matrix Matrix::scaled(const CycNumber& s) const {
  Matrix res = *this;
  for (auto& x : res.a_)
    if (!x.is_zero()) x = x * s;
  return res;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

size_t Matrix::nonzeros() const {
  size_t n = 0;
  for (const auto& x : a_)
    if (!x.is_zero()) ++n;
  return n;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::select_rows(const std::vector<int>& rows) const {
  Matrix b(static_cast<int>(rows.size()), c_);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < c_; ++j) b.at(static_cast<int>(i), j) = at(rows[i], j);
  return b;
}

Matrix Matrix::select_cols(const std::vector<int>& cols) const {
  Matrix b(r_, static_cast<int>(cols.size()));
  for (int i = 0; i < r_; ++i)
    for (size_t j = 0; j < cols.size(); ++j) b.at(i, static_cast<int>(j)) = at(i, cols[j]);
  return b;
}

int Matrix::rank() const {
  auto m = to_rows(*this, nullptr);
  return static_cast<int>(rref(m, c_).size());
}

Matrix Matrix::kernel() const {
  auto m = to_rows(*this, nullptr);
  auto piv = rref(m, c_);
  std::vector<bool> is_piv(c_, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < c_; ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix k(c_, static_cast<int>(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    int fc = free[f];
    k.at(fc, static_cast<int>(f)) = CycNumber(1);
    for (size_t r = 0; r < piv.size(); ++r) k.at(piv[r], static_cast<int>(f)) = -m[r][fc];
  }
  return k;
}

std::optional<Matrix> Matrix::inverse() const {
  if (r_ != c_) return std::nullopt;
  auto x = solve(identity(r_));
  if (!x) return std::nullopt;
  if (rank() != r_) return std::nullopt;
  return x;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows() != r_) throw std::invalid_argument("matrix shape mismatch in solve");
  auto m = to_rows(*this, &b);
  auto piv = rref(m, c_);
  for (size_t r = piv.size(); r < m.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      if (!m[r][c_ + j].is_zero()) return std::nullopt;
  Matrix x(c_, b.cols());
  for (size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x.at(piv[r], j) = m[r][c_ + j];
  return x;
}

std::optional<CycNumber> Matrix::proportional_to(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return std::nullopt;
  std::optional<CycNumber> s;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (o.a_[i].is_zero()) {
      if (!a_[i].is_zero()) return std::nullopt;
      continue;
    }
    if (!s) s = a_[i] / o.a_[i];
    else if (a_[i] != *s * o.a_[i]) return std::nullopt;
  }
  return s;
}

bool SparseEchelon::add(Vec v) {
  auto it = v.begin();
  while (it != v.end()) {
    if (it->second.is_zero()) {
      it = v.erase(it);
      continue;
    }
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    CycNumber f = it->second;
    int key = it->first;
    for (const auto& [col, val] : row->second)
      if (col != key) v[col] -= f * val;
    it = v.erase(v.find(key));
  }
  if (v.empty()) return false;
  CycNumber lead = v.begin()->second.inv();
  for (auto& entry : v) entry.second = entry.second * lead;
  int key = v.begin()->first;
  rows_.emplace(key, std::move(v));
  return true;
}

}  // namespace spinmon
