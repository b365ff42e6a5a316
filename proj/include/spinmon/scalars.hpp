#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace spinmon {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Element of Q(z) with z a primitive 16th root of unity, stored in the
// power basis 1, z, ..., z^7 modulo z^8 + 1.  Zero is the null pointer.
class CycNumber {
 public:
  using Coeffs = std::array<mpq_class, 8>;

  CycNumber() = default;
  CycNumber(long v);  // NOLINT: implicit integer embedding is intended
  CycNumber(const mpq_class& v);  // NOLINT
  explicit CycNumber(const Coeffs& c);

  // zeta_order^exponent; order must be one of 1, 2, 4, 8, 16.
  static CycNumber root(int order, long exponent);
  static CycNumber z_power(long e) { return root(16, e); }

  bool is_zero() const { return !c_; }
  bool is_rational() const { return !c_ || rational_; }
  const mpq_class& coeff(int i) const;
  Coeffs coeffs() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o) { return *this *= o.inv(); }
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inv(); }
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  // Throws DomainError on zero.
  CycNumber inv() const;
  CycNumber pow(long e) const;
  // Image under z -> z^k for odd k (a field automorphism).
  CycNumber galois(int k) const;

  bool is_one() const { return *this == CycNumber(1); }
  // If this equals z^e for some e in [0,16), returns e; otherwise -1.
  int as_root_of_unity() const;

  std::string str() const;
  std::size_t hash() const;

 private:
  static CycNumber from(Coeffs&& c);
  std::shared_ptr<const Coeffs> c_;
  bool rational_ = true;
};

CycNumber cyc_mul(const CycNumber& a, const CycNumber& b);
CycNumber cyc_inv(const CycNumber& a);
CycNumber cyc_root(int order, long exponent);

// a + b*sqrt(2) with rational a, b.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long a) : a_(a) {}  // NOLINT
  QSqrt2(const mpq_class& a) : a_(a) {}  // NOLINT
  QSqrt2(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {}
  static QSqrt2 sqrt2() { return {0, 1}; }
  // 2^(k/2) for any integer k.
  static QSqrt2 pow_sqrt2(long k);

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;

  QSqrt2 operator-() const { return {-a_, -b_}; }
  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  QSqrt2& operator+=(const QSqrt2& y) { return *this = *this + y; }
  QSqrt2& operator-=(const QSqrt2& y) { return *this = *this - y; }
  QSqrt2& operator*=(const QSqrt2& y) { return *this = *this * y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }
  QSqrt2 inv() const;
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inv(); }

  std::string str() const;

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

// sqrt(2) -> z^2 - z^6, i.e. zeta8 (1 - zeta4).
CycNumber embed_qsqrt2(const QSqrt2& x);

std::string rational_str(const mpq_class& q);

}  // namespace spinmon
