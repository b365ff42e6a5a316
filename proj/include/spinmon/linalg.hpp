#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spinmon/scalars.hpp"

namespace spinmon {

// Dense matrix over Q(zeta16).  Products skip zero entries, which keeps the
// signed permutation matrices that dominate this library cheap.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n, const CycNumber& s = CycNumber(1));

  int rows() const { return r_; }
  int cols() const { return c_; }
  CycNumber& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const CycNumber& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const CycNumber& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  Matrix select_rows(const std::vector<int>& rows) const;
  Matrix select_cols(const std::vector<int>& cols) const;
  size_t nonzeros() const;

  int rank() const;
  // Columns form a basis of the right kernel.
  Matrix kernel() const;
  std::optional<Matrix> inverse() const;
  // Some X with (*this) X = B, if one exists.
  std::optional<Matrix> solve(const Matrix& b) const;
  // If this equals s * o for a scalar s (o nonzero), returns s.
  std::optional<CycNumber> proportional_to(const Matrix& o) const;

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<CycNumber> a_;
};

// Row echelon form built one sparse vector at a time; used for rank
// computations where the dense matrix would be large but very sparse.
class SparseEchelon {
 public:
  using Vec = std::map<int, CycNumber>;
  // Returns true when v is independent of the vectors added so far.
  bool add(Vec v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::map<int, Vec> rows_;  // keyed by pivot column, leading entry 1
};

}  // namespace spinmon
