#include "spinmon/supervec.hpp"

#include <stdexcept>

namespace spinmon {

GradedBasis graded_basis(const std::vector<int>& parities) {
  GradedBasis g;
  int n = static_cast<int>(parities.size());
  g.pos.assign(n, 0);
  for (int k = 0; k < n; ++k)
    if (parities[k] % 2 == 0) g.order.push_back(k);
  g.space.even = static_cast<int>(g.order.size());
  for (int k = 0; k < n; ++k)
    if (parities[k] % 2 != 0) g.order.push_back(k);
  g.space.odd = n - g.space.even;
  for (int i = 0; i < n; ++i) g.pos[g.order[i]] = i;
  return g;
}

TensorSpace tensor_space(const SuperSpace& v, const SuperSpace& w) {
  TensorSpace t;
  t.left = v;
  t.right = w;
  std::vector<int> par;
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) par.push_back((v.parity(i) + w.parity(j)) % 2);
  GradedBasis g = graded_basis(par);
  t.space = g.space;
  t.index_of = g.pos;
  t.pairs.resize(par.size());
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) t.pairs[g.pos[i * w.dim() + j]] = {i, j};
  return t;
}

SuperMap::SuperMap(SuperSpace s, SuperSpace t, int p, Matrix mat)
    : src(s), tgt(t), parity(((p % 2) + 2) % 2), m(std::move(mat)) {
  if (m.rows() != tgt.dim() || m.cols() != src.dim())
    throw DomainError("super map shape does not match its spaces");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && tgt.parity(i) != (src.parity(j) + parity) % 2)
        throw DomainError("super map is not homogeneous of the declared parity");
}

SuperMap SuperMap::identity(const SuperSpace& v) { return {v, v, 0, Matrix::identity(v.dim())}; }

SuperMap SuperMap::zero(const SuperSpace& s, const SuperSpace& t, int p) {
  return {s, t, p, Matrix(t.dim(), s.dim())};
}

std::optional<int> SuperMap::detect_parity(const SuperSpace& s, const SuperSpace& t, const Matrix& m) {
  std::optional<int> p;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      int q = (t.parity(i) + s.parity(j)) % 2;
      if (p && *p != q) return std::nullopt;
      p = q;
    }
  if (!p) return 0;
  return p;
}

SuperMap SuperMap::operator*(const SuperMap& f) const {
  if (f.tgt != src) throw DomainError("composition of incompatible super maps");
  SuperMap r;
  r.src = f.src;
  r.tgt = tgt;
  r.parity = (parity + f.parity) % 2;
  r.m = m * f.m;
  return r;
}

SuperMap SuperMap::operator+(const SuperMap& f) const {
  if (f.src != src || f.tgt != tgt) throw DomainError("sum of incompatible super maps");
  if (f.parity != parity && !f.is_zero() && !is_zero()) throw DomainError("sum of maps of different parity");
  SuperMap r = *this;
  if (is_zero()) r.parity = f.parity;
  r.m = m + f.m;
  return r;
}

SuperMap SuperMap::operator-(const SuperMap& f) const { return *this + (-f); }

SuperMap SuperMap::operator-() const {
  SuperMap r = *this;
  r.m = -m;
  return r;
}

SuperMap SuperMap::scaled(const CycNumber& s) const {
  SuperMap r = *this;
  r.m = m.scaled(s);
  return r;
}

bool operator==(const SuperMap& a, const SuperMap& b) {
  if (a.src != b.src || a.tgt != b.tgt) return false;
  if (a.m != b.m) return false;
  return a.parity == b.parity || a.m.is_zero();
}

std::optional<SuperMap> SuperMap::inverse() const {
  auto inv = m.inverse();
  if (!inv) return std::nullopt;
  return SuperMap(tgt, src, parity, *inv);
}

MixedMap MixedMap::split(const SuperSpace& s, const SuperSpace& t, const Matrix& m) {
  Matrix e(m.rows(), m.cols()), o(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      if (t.parity(i) == s.parity(j)) e.at(i, j) = m.at(i, j);
      else o.at(i, j) = m.at(i, j);
    }
  return {SuperMap(s, t, 0, e), SuperMap(s, t, 1, o)};
}

MixedMap MixedMap::operator*(const MixedMap& f) const {
  return {even * f.even + odd * f.odd, even * f.odd + odd * f.even};
}

SuperMap compose(const SuperMap& g, const SuperMap& f) { return g * f; }

SuperMap tensor_map(const SuperMap& f, const SuperMap& g) {
  TensorSpace s = tensor_space(f.src, g.src);
  TensorSpace t = tensor_space(f.tgt, g.tgt);
  Matrix m(t.space.dim(), s.space.dim());
  for (int a = 0; a < s.space.dim(); ++a) {
    auto [v, w] = s.pairs[a];
    bool neg = (f.src.parity(v) * g.parity) % 2 == 1;
    for (int v2 = 0; v2 < f.tgt.dim(); ++v2) {
      const CycNumber& x = f.m.at(v2, v);
      if (x.is_zero()) continue;
      for (int w2 = 0; w2 < g.tgt.dim(); ++w2) {
        const CycNumber& y = g.m.at(w2, w);
        if (y.is_zero()) continue;
        CycNumber e = x * y;
        m.at(t.index(v2, w2), a) = neg ? -e : e;
      }
    }
  }
  return {s.space, t.space, f.parity + g.parity, m};
}

MixedMap tensor_map(const MixedMap& f, const MixedMap& g) {
  return {tensor_map(f.even, g.even) + tensor_map(f.odd, g.odd),
          tensor_map(f.even, g.odd) + tensor_map(f.odd, g.even)};
}

SuperMap symmetry(SymKind kind, const SuperSpace& v, const SuperSpace& w) {
  TensorSpace s = tensor_space(v, w);
  TensorSpace t = tensor_space(w, v);
  Matrix m(t.space.dim(), s.space.dim());
  for (int a = 0; a < s.space.dim(); ++a) {
    auto [i, j] = s.pairs[a];
    bool neg = kind == SymKind::Tau && v.parity(i) == 1 && w.parity(j) == 1;
    m.at(t.index(j, i), a) = neg ? -1 : 1;
  }
  return {s.space, t.space, 0, m};
}

SuperSpace pi(const SuperSpace& v, int k) {
  if (k % 2 == 0) return v;
  return {v.odd, v.even};
}

namespace {

// Position of basis vector i of V inside Pi(V).
int flip_index(const SuperSpace& v, int i) { return i >= v.even ? i - v.even : v.odd + i; }

}  // namespace

SuperMap xi_power(int n, int m, const SuperSpace& v) {
  SuperSpace s = pi(v, ((n % 2) + 2) % 2);
  SuperSpace t = pi(v, ((m % 2) + 2) % 2);
  if ((n - m) % 2 == 0) return SuperMap::identity(s);
  Matrix mat(t.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) mat.at(flip_index(s, i), i) = 1;
  return {s, t, 1, mat};
}

SuperMap pi_map(const SuperMap& f, int k) {
  SuperMap src_xi = xi_power(0, k, f.src);
  SuperMap tgt_xi = xi_power(0, k, f.tgt);
  SuperMap r = tgt_xi * f * *src_xi.inverse();
  if ((k * f.parity) % 2 == 1) r = -r;
  return r;
}

PiRight pi_right(const SuperSpace& v) {
  PiRight p;
  p.space = pi(v);
  Matrix mat(v.dim(), v.dim());
  for (int i = 0; i < v.dim(); ++i) mat.at(flip_index(v, i), i) = v.parity(i) ? -1 : 1;
  p.xi = SuperMap(v, p.space, 1, mat);
  return p;
}

Eigenspace eigenspace(const SuperMap& f, const CycNumber& lambda) {
  if (f.parity != 0 || f.src != f.tgt) throw DomainError("eigenspace needs an even endomorphism");
  const SuperSpace& v = f.src;
  Matrix shifted = f.m - Matrix::identity(v.dim(), lambda);
  Matrix ke = shifted.block(0, 0, v.even, v.even).kernel();
  Matrix ko = shifted.block(v.even, v.even, v.odd, v.odd).kernel();
  Eigenspace e;
  e.space = {ke.cols(), ko.cols()};
  Matrix inc(v.dim(), e.space.dim());
  for (int i = 0; i < v.even; ++i)
    for (int j = 0; j < ke.cols(); ++j) inc.at(i, j) = ke.at(i, j);
  for (int i = 0; i < v.odd; ++i)
    for (int j = 0; j < ko.cols(); ++j) inc.at(v.even + i, ke.cols() + j) = ko.at(i, j);
  e.inclusion = SuperMap(e.space, v, 0, inc);
  return e;
}

DirectSum direct_sum(const SuperSpace& v, const SuperSpace& w) {
  DirectSum d;
  d.space = {v.even + w.even, v.odd + w.odd};
  Matrix l(d.space.dim(), v.dim()), r(d.space.dim(), w.dim());
  for (int i = 0; i < v.even; ++i) l.at(i, i) = 1;
  for (int i = 0; i < v.odd; ++i) l.at(v.even + w.even + i, v.even + i) = 1;
  for (int i = 0; i < w.even; ++i) r.at(v.even + i, i) = 1;
  for (int i = 0; i < w.odd; ++i) r.at(v.even + w.even + v.odd + i, w.even + i) = 1;
  d.in_left = SuperMap(v, d.space, 0, l);
  d.in_right = SuperMap(w, d.space, 0, r);
  return d;
}

std::optional<Matrix> coordinates(const Matrix& x, const Matrix& y) { return x.solve(y); }

}  // namespace spinmon
