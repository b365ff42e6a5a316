#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinmon/clifford.hpp"

namespace spinmon {

// One-line notation on {0..n-1}: p[i] is the image of i.  Products compose
// right to left, (gh)(i) = g(h(i)).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& g, const Perm& h);
Perm perm_inv(const Perm& g);
int perm_length(const Perm& g);
// The transposition s_i (1-based, swaps i and i+1).
Perm perm_adjacent(int n, int i);
// Block swap tau_{n,m}: i -> i+m on the first n letters, i -> i-n on the rest.
Perm perm_tau(int n, int m);
Perm perm_direct_sum(const Perm& g, const Perm& h);
// Lexicographic rank in S_n and its inverse.
std::uint32_t perm_index(const Perm& g);
Perm perm_from_index(int n, std::uint32_t idx);
std::uint32_t factorial(int n);
std::vector<Perm> all_perms(int n);
// Lexicographically smallest reduced word (1-based generator indices).
std::vector<int> canonical_word(const Perm& g);
// 1-based cycle notation, e.g. "(1 3 2)"; identity renders as "()".
std::string cycle_notation(const Perm& g);

struct SpinFlavor {
  int delta = 1;
  int epsilon = 0;
  friend bool operator==(const SpinFlavor& a, const SpinFlavor& b) {
    return a.delta == b.delta && a.epsilon == b.epsilon;
  }
};
inline constexpr SpinFlavor kSpinStandard{1, 0};
// Flavors in the order S^0, S^1, S^2, S^3.
SpinFlavor flavor_by_index(int k);

// c^sign times the canonical lift of perm.
struct SpinGroupElement {
  int n = 0;
  SpinFlavor flavor;
  Perm perm;
  int sign = 0;

  int parity() const { return perm_length(perm) % 2; }
  friend bool operator==(const SpinGroupElement& a, const SpinGroupElement& b) {
    return a.n == b.n && a.flavor == b.flavor && a.perm == b.perm && a.sign == b.sign;
  }
  friend bool operator!=(const SpinGroupElement& a, const SpinGroupElement& b) { return !(a == b); }
  std::string str() const;
};

SpinGroupElement canonical_lift(const Perm& perm, SpinFlavor flavor = kSpinStandard);
SpinGroupElement spin_identity(int n, SpinFlavor flavor = kSpinStandard);
SpinGroupElement spin_c(int n, SpinFlavor flavor = kSpinStandard);
SpinGroupElement spin_generator(int n, int i, SpinFlavor flavor = kSpinStandard);
SpinGroupElement group_mul(const SpinGroupElement& g, const SpinGroupElement& h);
SpinGroupElement group_inv(const SpinGroupElement& g);
SpinGroupElement group_product(const std::vector<SpinGroupElement>& factors);
// Exponent k in lift(g) lift(h) = c^k lift(gh).
int spin_cocycle(SpinFlavor flavor, const Perm& g, const Perm& h);

// Image of the canonical lift under s_i -> (alpha_{i+1} - alpha_i)/2, memoized
// for small ranks.
CliffordElement lift_clifford_image(const Perm& perm);
CliffordElement spin_clifford_image(const SpinGroupElement& g);

// sigma_{n,i} = s_i s_{i+1} ... s_{i+n-1} inside S_{total}.
SpinGroupElement sigma_tilde(int total, int n, int i);
SpinGroupElement tau_tilde(int n, int m);
SpinGroupElement j_embed(int n, int m, const SpinGroupElement& g, const SpinGroupElement& h);

// Element of k[S_n~]/(c+1), keyed by the index of the permutation whose
// canonical lift carries the coefficient.
class TgaElement {
 public:
  TgaElement() = default;
  explicit TgaElement(int n) : n_(n) {}
  static TgaElement from_group(const SpinGroupElement& g, const CycNumber& coeff = CycNumber(1));
  static TgaElement scalar(int n, const CycNumber& c);

  int rank() const { return n_; }
  const std::map<std::uint32_t, CycNumber>& terms() const { return terms_; }
  CycNumber coefficient(const Perm& p) const;
  bool is_zero() const { return terms_.empty(); }

  TgaElement operator*(const TgaElement& o) const;
  TgaElement operator+(const TgaElement& o) const;
  TgaElement operator-(const TgaElement& o) const;
  TgaElement operator-() const { return scaled(CycNumber(-1)); }
  TgaElement scaled(const CycNumber& c) const;
  friend bool operator==(const TgaElement& a, const TgaElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TgaElement& a, const TgaElement& b) { return !(a == b); }
  // Parity when homogeneous, 0 for zero.
  std::optional<int> parity() const;
  std::string str() const;

 private:
  void add_term(std::uint32_t idx, const CycNumber& c);
  int n_ = 0;
  std::map<std::uint32_t, CycNumber> terms_;
};

TgaElement tga_mul(const TgaElement& a, const TgaElement& b);
// Tensor of algebra elements through j_embed.
TgaElement tga_tensor(int n, int m, const TgaElement& a, const TgaElement& b);

// Sum of c * w * alpha_S in k[S_n] |x Cl_n, with w alpha_i w^{-1} = alpha_{w(i)}.
class HeckeCliffordElement {
 public:
  using Key = std::pair<std::uint32_t, CliffordMask>;

  HeckeCliffordElement() = default;
  explicit HeckeCliffordElement(int n) : n_(n) {}
  static HeckeCliffordElement perm(const Perm& w, const CycNumber& c = CycNumber(1));
  static HeckeCliffordElement clifford(const CliffordElement& x);

  int rank() const { return n_; }
  const std::map<Key, CycNumber>& terms() const { return terms_; }

  HeckeCliffordElement operator*(const HeckeCliffordElement& o) const;
  HeckeCliffordElement operator+(const HeckeCliffordElement& o) const;
  HeckeCliffordElement operator-(const HeckeCliffordElement& o) const;
  HeckeCliffordElement operator-() const { return scaled(CycNumber(-1)); }
  HeckeCliffordElement scaled(const CycNumber& c) const;
  friend bool operator==(const HeckeCliffordElement& a, const HeckeCliffordElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeCliffordElement& a, const HeckeCliffordElement& b) { return !(a == b); }
  std::string str() const;

 private:
  void add_term(const Key& k, const CycNumber& c);
  int n_ = 0;
  std::map<Key, CycNumber> terms_;
};

// s_j -> (zeta4 / 2) s_j (alpha_j - alpha_{j+1}), extended along the canonical word.
HeckeCliffordElement hecke_phi(const SpinGroupElement& g);
// x (x) y -> phi(x) y.
HeckeCliffordElement hecke_iso(const TgaElement& x, const CliffordElement& y);

struct HeckeIsoReport {
  int n = 0;
  bool relations = false;
  int rank = 0;
  int expected_rank = 0;
  bool pass() const { return relations && rank == expected_rank; }
};
HeckeIsoReport hecke_iso_check(int n);

struct TauFactorizationReport {
  int m = 0;
  int n = 0;
  bool holds = false;
};
// tau_{m,n} = (-1)^{binom(mn,2)} zeta4^{mn} phi(tau~_{m,n}) psi(tau~_{m,n}) in H_{m+n}.
TauFactorizationReport tau_factorization(int m, int n);

}  // namespace spinmon
