#include "spinmon/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace spinmon {

MonomialProduct monomial_product(CliffordMask s, CliffordMask t) {
  int swaps = 0;
  for (CliffordMask rest = t; rest; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    swaps += std::popcount(s >> (b + 1));
  }
  return {swaps % 2 ? -1 : 1, std::popcount(s & t), s ^ t};
}

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n) throw DomainError("Clifford generator index out of range");
}

CycNumber power_of_two(int k) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return CycNumber(mpq_class(z));
}

}  // namespace

CliffordElement CliffordElement::scalar(int n, const CycNumber& c) { return monomial(n, 0, c); }

CliffordElement CliffordElement::generator(int n, int i) {
  check_index(n, i);
  return monomial(n, CliffordMask{1} << (i - 1));
}

CliffordElement CliffordElement::monomial(int n, CliffordMask s, const CycNumber& c) {
  CliffordElement e(n);
  e.add_term(s, c);
  return e;
}

void CliffordElement::add_term(CliffordMask s, const CycNumber& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycNumber CliffordElement::coefficient(CliffordMask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? CycNumber() : it->second;
}

std::optional<int> CliffordElement::parity() const {
  std::optional<int> p;
  for (const auto& [s, c] : terms_) {
    int q = std::popcount(s) % 2;
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p ? p : 0;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  if (n_ != o.n_) throw DomainError("Clifford rank mismatch");
  CliffordElement r(n_);
  for (const auto& [s, a] : terms_)
    for (const auto& [t, b] : o.terms_) {
      MonomialProduct mp = monomial_product(s, t);
      CycNumber c = a * b;
      if (mp.twos) c = c * power_of_two(mp.twos);
      r.add_term(mp.mask, mp.sign < 0 ? -c : c);
    }
  return r;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  if (n_ != o.n_) throw DomainError("Clifford rank mismatch");
  CliffordElement r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const { return *this + (-o); }

CliffordElement CliffordElement::operator-() const { return scaled(CycNumber(-1)); }

CliffordElement CliffordElement::scaled(const CycNumber& c) const {
  CliffordElement r(n_);
  for (const auto& [s, a] : terms_) r.add_term(s, a * c);
  return r;
}

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (s) {
      os << "*a{";
      bool f = true;
      for (int i = 0; i < n_; ++i)
        if (s >> i & 1) {
          os << (f ? "" : ",") << i + 1;
          f = false;
        }
      os << "}";
    }
  }
  return os.str();
}

CliffordElement cl_mul(const CliffordElement& x, const CliffordElement& y) { return x * y; }

CliffordElement cl_from_word(int n, const std::vector<WordLetter>& word) {
  CliffordElement r = CliffordElement::scalar(n, 1);
  for (const auto& l : word) r = r * CliffordElement::generator(n, l.index).scaled(l.scalar);
  return r;
}

CliffordElement cl_from_word(int n, const std::vector<int>& word) {
  std::vector<WordLetter> w;
  for (int i : word) w.push_back({i});
  return cl_from_word(n, w);
}

CliffordElement spin_image(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("spin generator index out of range");
  CycNumber half(mpq_class(1, 2));
  return CliffordElement::monomial(n, CliffordMask{1} << i, half) -
         CliffordElement::monomial(n, CliffordMask{1} << (i - 1), half);
}

namespace {

SuperMap monomial_image(CliffordMask s, const std::vector<SuperMap>& actions, const SuperSpace& v) {
  SuperMap r = SuperMap::identity(v);
  for (size_t i = 0; i < actions.size(); ++i)
    if (s >> i & 1) r = r * actions[i];
  return r;
}

}  // namespace

SuperMap cl_image(const CliffordElement& x, const std::vector<SuperMap>& actions) {
  if (actions.empty() && x.rank() != 0) throw DomainError("no actions supplied");
  if (static_cast<int>(actions.size()) != x.rank()) throw DomainError("action count does not match rank");
  SuperSpace v = actions.empty() ? SuperSpace{} : actions[0].src;
  auto p = x.parity();
  if (!p) throw DomainError("image of a mixed element requested as a super map");
  SuperMap r = SuperMap::zero(v, v, *p);
  for (const auto& [s, c] : x.terms()) r = r + monomial_image(s, actions, v).scaled(c);
  return r;
}

bool satisfies_clifford_relations(const std::vector<SuperMap>& actions) {
  for (size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].parity != 1) return false;
    const SuperSpace& v = actions[i].src;
    if (actions[i] * actions[i] != SuperMap::identity(v).scaled(2)) return false;
    for (size_t j = i + 1; j < actions.size(); ++j)
      if (!(actions[i] * actions[j] + actions[j] * actions[i]).is_zero()) return false;
  }
  return true;
}

int monomial_image_rank(const std::vector<SuperMap>& actions) {
  SparseEchelon ech;
  int n = static_cast<int>(actions.size());
  SuperSpace v = actions.at(0).src;
  for (CliffordMask s = 0; s < (CliffordMask{1} << n); ++s) {
    SuperMap m = monomial_image(s, actions, v);
    SparseEchelon::Vec vec;
    for (int i = 0; i < v.dim(); ++i)
      for (int j = 0; j < v.dim(); ++j)
        if (!m.m.at(i, j).is_zero()) vec[i * v.dim() + j] = m.m.at(i, j);
    ech.add(std::move(vec));
  }
  return ech.rank();
}

SuperMap xi_11() {
  Matrix m(2, 2);
  m.at(1, 0) = 1;
  m.at(0, 1) = 2;
  return {{1, 1}, {1, 1}, 1, m};
}

namespace {

// e_0 -> e_1, e_1 -> -2 e_0: squares to -2.
SuperMap xi_11_op() {
  Matrix m(2, 2);
  m.at(1, 0) = 1;
  m.at(0, 1) = -2;
  return {{1, 1}, {1, 1}, 1, m};
}

}  // namespace

std::pair<SuperMap, SuperMap> cl2_matrix_iso() { return {xi_11(), xi_11_op().scaled(cyc_root(4, 1))}; }

QuaternionElement QuaternionElement::basis(int b) {
  QuaternionElement q;
  q.c[b] = 1;
  return q;
}

QuaternionElement QuaternionElement::operator*(const QuaternionElement& o) const {
  // Basis products e_a e_b = sign * e_{a xor b} with i = e_1, j = e_2, k = e_3.
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  QuaternionElement r;
  for (int a = 0; a < 4; ++a) {
    if (c[a].is_zero()) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c[b].is_zero()) continue;
      CycNumber t = c[a] * o.c[b];
      r.c[a ^ b] += sign[a][b] < 0 ? -t : t;
    }
  }
  return r;
}

QuaternionElement QuaternionElement::operator+(const QuaternionElement& o) const {
  QuaternionElement r = *this;
  for (int a = 0; a < 4; ++a) r.c[a] += o.c[a];
  return r;
}

QuaternionElement QuaternionElement::conjugate() const {
  QuaternionElement r = *this;
  for (int a = 1; a < 4; ++a) r.c[a] = -r.c[a];
  return r;
}

Matrix quaternion_left(const QuaternionElement& q) {
  Matrix m(4, 4);
  for (int b = 0; b < 4; ++b) {
    QuaternionElement col = q * QuaternionElement::basis(b);
    for (int a = 0; a < 4; ++a) m.at(a, b) = col.c[a];
  }
  return m;
}

Matrix quaternion_right(const QuaternionElement& q) {
  Matrix m(4, 4);
  for (int b = 0; b < 4; ++b) {
    QuaternionElement col = QuaternionElement::basis(b) * q;
    for (int a = 0; a < 4; ++a) m.at(a, b) = col.c[a];
  }
  return m;
}

std::vector<SuperMap> cl8_matrix_iso() {
  SuperSpace h{4, 0};
  SuperSpace k11{1, 1};
  auto even_h = [&](const Matrix& m) { return SuperMap(h, h, 0, m); };
  SuperMap one_h = SuperMap::identity(h), one_k = SuperMap::identity(k11);
  SuperMap b = xi_11_op(), g = xi_11();
  QuaternionElement qi = QuaternionElement::basis(1), qj = QuaternionElement::basis(2),
                    qk = QuaternionElement::basis(3);
  QuaternionElement minus_i = qi;
  minus_i.c[1] = -1;
  std::vector<SuperMap> out;
  // Cl_3 = H (x) Cl_1^op on the first two factors, extended by Cl_1.
  for (const auto& q : {qk, qj, minus_i})
    out.push_back(tensor_map(tensor_map(even_h(quaternion_left(q)), b), one_k));
  out.push_back(tensor_map(tensor_map(one_h, g), one_k));
  // The second Cl_4 acts through right multiplication, i.e. through H^op.
  for (const auto& q : {qk, qj, minus_i})
    out.push_back(tensor_map(tensor_map(even_h(quaternion_right(q)), one_k), b));
  out.push_back(tensor_map(tensor_map(one_h, one_k), g));
  return out;
}

namespace {

int vector_rank(const std::vector<std::vector<CycNumber>>& vs) {
  SparseEchelon ech;
  for (const auto& v : vs) {
    SparseEchelon::Vec s;
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) s[static_cast<int>(i)] = v[i];
    ech.add(std::move(s));
  }
  return ech.rank();
}

std::vector<CycNumber> flatten(const Matrix& m) {
  std::vector<CycNumber> v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

std::vector<CycNumber> clifford_coords(const CliffordElement& x) {
  std::vector<CycNumber> v(CliffordMask{1} << x.rank());
  for (const auto& [s, c] : x.terms()) v[s] = c;
  return v;
}

SmallIsoReport verify_cl1_tensor_cl1op() {
  SmallIsoReport r{"Cl_1 (x) Cl_1^op"};
  SuperMap a = xi_11(), b = xi_11_op();
  SuperMap id = SuperMap::identity({1, 1});
  r.homomorphism = a * a == id.scaled(2) && b * b == id.scaled(-2) && (a * b + b * a).is_zero();
  r.expected_rank = 4;
  r.rank = vector_rank({flatten(id.m), flatten(a.m), flatten(b.m), flatten((a * b).m)});
  return r;
}

SmallIsoReport verify_cl3_quaternion() {
  SmallIsoReport r{"Cl_3"};
  const int n = 3;
  CycNumber half(mpq_class(1, 2));
  CliffordElement i = cl_from_word(n, {1, 2}).scaled(half);
  CliffordElement j = cl_from_word(n, {1, 3}).scaled(half);
  CliffordElement a = cl_from_word(n, {1, 2, 3}).scaled(half);
  CliffordElement one = CliffordElement::scalar(n, 1);
  r.homomorphism = i * i == -one && j * j == -one && i * j == -(j * i) && a * a == one.scaled(-2) &&
                   i * a == a * i && j * a == a * j && a.parity() == 1 && i.parity() == 0 &&
                   j.parity() == 0;
  std::vector<std::vector<CycNumber>> imgs;
  for (const auto& h : {one, i, j, i * j})
    for (const auto& c : {one, a}) imgs.push_back(clifford_coords(h * c));
  r.expected_rank = 8;
  r.rank = vector_rank(imgs);
  return r;
}

// Element of H (x) End(k^{1|1}); H is purely even so products need no signs.
struct HEnd {
  std::array<Matrix, 4> part{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};

  HEnd operator*(const HEnd& o) const {
    HEnd r;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        QuaternionElement q = QuaternionElement::basis(a) * QuaternionElement::basis(b);
        Matrix prod = part[a] * o.part[b];
        for (int c = 0; c < 4; ++c)
          if (!q.c[c].is_zero()) r.part[c] = r.part[c] + prod.scaled(q.c[c]);
      }
    return r;
  }
  HEnd operator+(const HEnd& o) const {
    HEnd r;
    for (int a = 0; a < 4; ++a) r.part[a] = part[a] + o.part[a];
    return r;
  }
  HEnd scaled(const CycNumber& s) const {
    HEnd r;
    for (int a = 0; a < 4; ++a) r.part[a] = part[a].scaled(s);
    return r;
  }
  bool operator==(const HEnd& o) const { return part == o.part; }
  std::vector<CycNumber> coords() const {
    std::vector<CycNumber> v;
    for (const auto& m : part) {
      auto f = flatten(m);
      v.insert(v.end(), f.begin(), f.end());
    }
    return v;
  }
  static HEnd pure(int q, const Matrix& m) {
    HEnd r;
    r.part[q] = m;
    return r;
  }
};

// Quaternion conjugation together with [[a,b],[c,d]] -> [[a,-c],[b,d]].
HEnd theta(const HEnd& x) {
  HEnd r;
  for (int q = 0; q < 4; ++q) {
    const Matrix& m = x.part[q];
    Matrix t(2, 2);
    t.at(0, 0) = m.at(0, 0);
    t.at(0, 1) = -m.at(1, 0);
    t.at(1, 0) = m.at(0, 1);
    t.at(1, 1) = m.at(1, 1);
    r.part[q] = q == 0 ? t : -t;
  }
  return r;
}

SmallIsoReport verify_cl4_quaternion_matrix() {
  SmallIsoReport r{"Cl_4"};
  const int n = 4;
  Matrix b = xi_11_op().m, g = xi_11().m, id2 = Matrix::identity(2);
  // Cl_4 = Cl_3 (x) Cl_1 = H (x) Cl_1^op (x) Cl_1 = H (x) End(k^{1|1}).
  std::vector<HEnd> gens = {HEnd::pure(3, b), HEnd::pure(2, b), HEnd::pure(1, -b), HEnd::pure(0, g)};
  std::vector<HEnd> phi(16);
  std::vector<std::vector<CycNumber>> coords;
  for (CliffordMask s = 0; s < 16; ++s) {
    HEnd x = HEnd::pure(0, id2);
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) x = x * gens[i];
    phi[s] = x;
    coords.push_back(x.coords());
  }
  bool hom = true;
  HEnd one = HEnd::pure(0, id2);
  for (int i = 0; i < n; ++i) {
    hom = hom && gens[i] * gens[i] == one.scaled(2);
    for (int j = i + 1; j < n; ++j) hom = hom && gens[i] * gens[j] == gens[j] * gens[i].scaled(-1);
  }
  // Solve for phi^{-1} on the image of theta.
  Matrix basis(16, 16);
  for (int s = 0; s < 16; ++s)
    for (int c = 0; c < 16; ++c) basis.at(c, s) = coords[s][c];
  auto psi = [&](CliffordMask s) {
    auto v = theta(phi[s]).coords();
    Matrix rhs(16, 1);
    for (int c = 0; c < 16; ++c) rhs.at(c, 0) = v[c];
    Matrix x = *basis.solve(rhs);
    CliffordElement e(n);
    for (int t = 0; t < 16; ++t) e = e + CliffordElement::monomial(n, t, x.at(t, 0));
    return e;
  };
  std::vector<CliffordElement> images(16);
  std::vector<std::vector<CycNumber>> image_coords;
  for (CliffordMask s = 0; s < 16; ++s) {
    images[s] = psi(s);
    image_coords.push_back(clifford_coords(images[s]));
    hom = hom && images[s].parity() == std::popcount(s) % 2;
  }
  // Psi(xy) = (-1)^{|x||y|} Psi(y) Psi(x): an isomorphism onto the opposite algebra.
  for (CliffordMask s = 0; s < 16 && hom; ++s)
    for (CliffordMask t = 0; t < 16; ++t) {
      MonomialProduct mp = monomial_product(s, t);
      CliffordElement lhs = images[mp.mask].scaled(mp.sign * (1 << mp.twos));
      CliffordElement rhs = images[t] * images[s];
      if (std::popcount(s) % 2 && std::popcount(t) % 2) rhs = -rhs;
      if (lhs != rhs) {
        hom = false;
        break;
      }
    }
  r.homomorphism = hom && vector_rank(coords) == 16;
  r.expected_rank = 16;
  r.rank = vector_rank(image_coords);
  return r;
}

}  // namespace

SmallIsoReport small_iso_verify(SmallIso which) {
  switch (which) {
    case SmallIso::Cl1TensorCl1op: return verify_cl1_tensor_cl1op();
    case SmallIso::Cl3Quaternion: return verify_cl3_quaternion();
    case SmallIso::Cl4QuaternionMatrix: return verify_cl4_quaternion_matrix();
  }
  throw DomainError("unknown isomorphism");
}

std::optional<CliffordElement> cl_preimage(const std::vector<SuperMap>& actions, const Matrix& target) {
  int n = static_cast<int>(actions.size());
  SuperSpace v = actions.at(0).src;
  CliffordElement e(n);
  CycNumber inv_dim = CycNumber(v.dim()).inv();
  for (CliffordMask s = 0; s < (CliffordMask{1} << n); ++s) {
    Matrix m = monomial_image(s, actions, v).m;
    MonomialProduct sq = monomial_product(s, s);
    // rho(alpha_S)^{-1} = rho(alpha_S) / (sign * 2^twos); take trace against target.
    CycNumber tr;
    Matrix prod = m * target;
    for (int i = 0; i < v.dim(); ++i) tr += prod.at(i, i);
    if (tr.is_zero()) continue;
    CycNumber c = tr * inv_dim * power_of_two(sq.twos).inv();
    if (sq.sign < 0) c = -c;
    e = e + CliffordElement::monomial(n, s, c);
  }
  auto p = e.parity();
  if (!p) return std::nullopt;
  if (cl_image(e, actions).m != target) return std::nullopt;
  return e;
}

PeriodicityData periodicity_data(int p) {
  PeriodicityData d;
  d.p = p;
  if (p == 2) {
    auto [a1, a2] = cl2_matrix_iso();
    d.actions = {a1, a2};
  } else if (p == 8) {
    d.actions = cl8_matrix_iso();
  } else {
    throw DomainError("periodicity is available for p = 2 and p = 8");
  }
  d.module_u = d.actions[0].src;
  Matrix e00(d.module_u.dim(), d.module_u.dim());
  e00.at(0, 0) = 1;
  auto eps = cl_preimage(d.actions, e00);
  if (!eps) throw std::logic_error("matrix unit has no Clifford preimage");
  d.idempotent_eps = *eps;
  return d;
}

}  // namespace spinmon
