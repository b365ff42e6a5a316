#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinmon/supervec.hpp"

namespace spinmon {

// Subset S of {1..n} encoded as a bit mask, bit i-1 standing for alpha_i.
using CliffordMask = std::uint32_t;

// Sign and power of two in alpha_S alpha_T = sign * 2^k * alpha_{S xor T}.
struct MonomialProduct {
  int sign;
  int twos;
  CliffordMask mask;
};
MonomialProduct monomial_product(CliffordMask s, CliffordMask t);

class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int n) : n_(n) {}
  static CliffordElement scalar(int n, const CycNumber& c);
  static CliffordElement generator(int n, int i);
  static CliffordElement monomial(int n, CliffordMask s, const CycNumber& c = CycNumber(1));

  int rank() const { return n_; }
  const std::map<CliffordMask, CycNumber>& terms() const { return terms_; }
  CycNumber coefficient(CliffordMask s) const;
  bool is_zero() const { return terms_.empty(); }
  // Parity when all terms agree, 0 for the zero element.
  std::optional<int> parity() const;

  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement scaled(const CycNumber& c) const;
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

  // Terms as "c*a{1,2}" joined by " + ".
  std::string str() const;

 private:
  void add_term(CliffordMask s, const CycNumber& c);
  int n_ = 0;
  std::map<CliffordMask, CycNumber> terms_;
};

CliffordElement cl_mul(const CliffordElement& x, const CliffordElement& y);

struct WordLetter {
  int index;  // 1-based generator index
  CycNumber scalar = CycNumber(1);
};
// Product of scalar_k * alpha_{index_k} in order; empty word gives 1.
CliffordElement cl_from_word(int n, const std::vector<WordLetter>& word);
CliffordElement cl_from_word(int n, const std::vector<int>& word);

// (alpha_{i+1} - alpha_i) / 2 in Cl_n.
CliffordElement spin_image(int n, int i);

// Image of x when alpha_i acts by actions[i-1].
SuperMap cl_image(const CliffordElement& x, const std::vector<SuperMap>& actions);
// Checks alpha_i^2 = 2 and anticommutation on a family of odd maps.
bool satisfies_clifford_relations(const std::vector<SuperMap>& actions);
// Rank of the span of the 2^n monomial images.
int monomial_image_rank(const std::vector<SuperMap>& actions);

// e_0 -> e_1, e_1 -> 2 e_0 on k^{1|1}.
SuperMap xi_11();
// Images of alpha_1, alpha_2 in End(k^{1|1}).
std::pair<SuperMap, SuperMap> cl2_matrix_iso();
// Eight generator images in End(k^{8|8}), built on H (x) k^{1|1} (x) k^{1|1}
// from left and right quaternion multiplication.
std::vector<SuperMap> cl8_matrix_iso();

// Coefficients on 1, i, j, k = ij.
struct QuaternionElement {
  std::array<CycNumber, 4> c;

  static QuaternionElement basis(int b);
  QuaternionElement operator*(const QuaternionElement& o) const;
  QuaternionElement operator+(const QuaternionElement& o) const;
  friend bool operator==(const QuaternionElement& a, const QuaternionElement& b) { return a.c == b.c; }
  QuaternionElement conjugate() const;
};
// Left / right multiplication by a quaternion on H with basis 1, i, j, k.
Matrix quaternion_left(const QuaternionElement& q);
Matrix quaternion_right(const QuaternionElement& q);

enum class SmallIso { Cl1TensorCl1op, Cl3Quaternion, Cl4QuaternionMatrix };

struct SmallIsoReport {
  std::string name;
  bool homomorphism = false;
  int rank = 0;
  int expected_rank = 0;
  bool pass() const { return homomorphism && rank == expected_rank; }
};
SmallIsoReport small_iso_verify(SmallIso which);

struct PeriodicityData {
  int p = 0;
  SuperSpace module_u;
  std::vector<SuperMap> actions;
  CliffordElement idempotent_eps;
};
PeriodicityData periodicity_data(int p);
// Preimage of a target matrix under a faithful irreducible Clifford action,
// computed from the trace pairing and then verified.
std::optional<CliffordElement> cl_preimage(const std::vector<SuperMap>& actions, const Matrix& target);

}  // namespace spinmon
