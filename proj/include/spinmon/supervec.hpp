#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinmon/linalg.hpp"

namespace spinmon {

// Basis indices [0, even) are even, [even, even + odd) are odd.
struct SuperSpace {
  int even = 0;
  int odd = 0;

  int dim() const { return even + odd; }
  int parity(int i) const { return i < even ? 0 : 1; }
  friend bool operator==(const SuperSpace& a, const SuperSpace& b) {
    return a.even == b.even && a.odd == b.odd;
  }
  friend bool operator!=(const SuperSpace& a, const SuperSpace& b) { return !(a == b); }
};

// A list of homogeneous vectors reordered so that even ones come first.
struct GradedBasis {
  SuperSpace space;
  std::vector<int> pos;  // pos[k] = index of the k-th listed vector
  std::vector<int> order;  // inverse of pos
};
GradedBasis graded_basis(const std::vector<int>& parities);

// V (x) W.  Pairs are listed row-major, evens first then odds.
struct TensorSpace {
  SuperSpace space;
  SuperSpace left;
  SuperSpace right;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> index_of;  // i * right.dim() + j -> basis index

  int index(int i, int j) const { return index_of[static_cast<size_t>(i) * right.dim() + j]; }
};
TensorSpace tensor_space(const SuperSpace& v, const SuperSpace& w);

struct SuperMap {
  SuperSpace src;
  SuperSpace tgt;
  int parity = 0;
  Matrix m;

  SuperMap() = default;
  // Throws DomainError when the matrix is not homogeneous of this parity.
  SuperMap(SuperSpace s, SuperSpace t, int p, Matrix mat);

  static SuperMap identity(const SuperSpace& v);
  static SuperMap zero(const SuperSpace& s, const SuperSpace& t, int p);
  // Parity of a nonzero homogeneous matrix, or nullopt if it is mixed.
  static std::optional<int> detect_parity(const SuperSpace& s, const SuperSpace& t, const Matrix& m);

  SuperMap operator*(const SuperMap& f) const;  // composition this o f
  SuperMap operator+(const SuperMap& f) const;
  SuperMap operator-(const SuperMap& f) const;
  SuperMap operator-() const;
  SuperMap scaled(const CycNumber& s) const;
  friend bool operator==(const SuperMap& a, const SuperMap& b);
  friend bool operator!=(const SuperMap& a, const SuperMap& b) { return !(a == b); }
  std::optional<SuperMap> inverse() const;
  bool is_zero() const { return m.is_zero(); }
};

// A map with both parities present, kept as its homogeneous components.
struct MixedMap {
  SuperMap even;
  SuperMap odd;

  static MixedMap split(const SuperSpace& s, const SuperSpace& t, const Matrix& m);
  Matrix matrix() const { return even.m + odd.m; }
  MixedMap operator*(const MixedMap& f) const;
};

SuperMap compose(const SuperMap& g, const SuperMap& f);

// (f (x) g)(v (x) w) = (-1)^{|v||g|} f(v) (x) g(w).
SuperMap tensor_map(const SuperMap& f, const SuperMap& g);
MixedMap tensor_map(const MixedMap& f, const MixedMap& g);

enum class SymKind { Sigma, Tau };
// V (x) W -> W (x) V; tau carries the sign (-1)^{|v||w|}.
SuperMap symmetry(SymKind kind, const SuperSpace& v, const SuperSpace& w);

// Neutral Pi: the parity flip with identity underlying map.
SuperSpace pi(const SuperSpace& v, int k = 1);
// xi^{n,m}: Pi^n(V) -> Pi^m(V), parity m - n.
SuperMap xi_power(int n, int m, const SuperSpace& v);
// Pi applied to a map between neutral Pi-shifts: Pi(f) = (-1)^{|f|} f.
SuperMap pi_map(const SuperMap& f, int k = 1);

// V (x) k[1] together with xi_r(v) = (-1)^{|v|} v (x) pi.
struct PiRight {
  SuperSpace space;
  SuperMap xi;
};
PiRight pi_right(const SuperSpace& v);

struct Eigenspace {
  SuperSpace space;
  SuperMap inclusion;
};
// ker(f - lambda); f must be even and square.
Eigenspace eigenspace(const SuperMap& f, const CycNumber& lambda);

// V (+) W with basis: evens of V, evens of W, odds of V, odds of W.
struct DirectSum {
  SuperSpace space;
  SuperMap in_left;
  SuperMap in_right;
};
DirectSum direct_sum(const SuperSpace& v, const SuperSpace& w);

// Coordinates of the columns of y in the column span of the injective map x.
std::optional<Matrix> coordinates(const Matrix& x, const Matrix& y);

}  // namespace spinmon
