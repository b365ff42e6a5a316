#include "spinmon/scalars.hpp"

#include <functional>
#include <sstream>
#include <utility>

namespace spinmon {

namespace {

const mpq_class& zero_q() {
  static const mpq_class z(0);
  return z;
}

bool coeffs_zero(const CycNumber::Coeffs& c) {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

}  // namespace

CycNumber CycNumber::from(Coeffs&& c) {
  CycNumber r;
  if (coeffs_zero(c)) return r;
  bool rat = true;
  for (int i = 1; i < 8; ++i)
    if (c[i] != 0) rat = false;
  r.c_ = std::make_shared<const Coeffs>(std::move(c));
  r.rational_ = rat;
  return r;
}

CycNumber::CycNumber(long v) {
  if (v == 0) return;
  Coeffs c;
  c[0] = v;
  *this = from(std::move(c));
}

CycNumber::CycNumber(const mpq_class& v) {
  if (v == 0) return;
  Coeffs c;
  c[0] = v;
  c[0].canonicalize();
  *this = from(std::move(c));
}

CycNumber::CycNumber(const Coeffs& c) {
  Coeffs copy = c;
  for (auto& x : copy) x.canonicalize();
  *this = from(std::move(copy));
}

CycNumber CycNumber::root(int order, long exponent) {
  if (order != 1 && order != 2 && order != 4 && order != 8 && order != 16)
    throw DomainError("root order must divide 16");
  long e = ((exponent % order) + order) % order;
  e *= 16 / order;
  Coeffs c;
  if (e < 8)
    c[e] = 1;
  else
    c[e - 8] = -1;
  return from(std::move(c));
}

const mpq_class& CycNumber::coeff(int i) const { return c_ ? (*c_)[i] : zero_q(); }

CycNumber::Coeffs CycNumber::coeffs() const {
  if (c_) return *c_;
  return Coeffs{};
}

CycNumber CycNumber::operator-() const {
  if (!c_) return {};
  Coeffs c = *c_;
  for (auto& x : c) x = -x;
  return from(std::move(c));
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (!o.c_) return *this;
  if (!c_) return *this = o;
  Coeffs c = *c_;
  for (int i = 0; i < 8; ++i) c[i] += (*o.c_)[i];
  return *this = from(std::move(c));
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  if (!o.c_) return *this;
  Coeffs c = coeffs();
  for (int i = 0; i < 8; ++i) c[i] -= (*o.c_)[i];
  return *this = from(std::move(c));
}

CycNumber& CycNumber::operator*=(const CycNumber& o) { return *this = *this * o; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  if (!a.c_ || !b.c_) return {};
  const auto& x = *a.c_;
  const auto& y = *b.c_;
  CycNumber::Coeffs r;
  if (a.rational_) {
    for (int i = 0; i < 8; ++i)
      if (y[i] != 0) r[i] = x[0] * y[i];
    return CycNumber::from(std::move(r));
  }
  if (b.rational_) {
    for (int i = 0; i < 8; ++i)
      if (x[i] != 0) r[i] = x[i] * y[0];
    return CycNumber::from(std::move(r));
  }
  mpq_class t;
  for (int i = 0; i < 8; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (y[j] == 0) continue;
      t = x[i] * y[j];
      int k = i + j;
      if (k < 8)
        r[k] += t;
      else
        r[k - 8] -= t;
    }
  }
  return CycNumber::from(std::move(r));
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.c_ == b.c_) return true;
  if (!a.c_ || !b.c_) return false;
  return *a.c_ == *b.c_;
}

CycNumber CycNumber::inv() const {
  if (!c_) throw DomainError("inverse of zero");
  if (rational_) return CycNumber(mpq_class(1 / (*c_)[0]));
  // Solve M x = e_0 where M is multiplication by this number.
  std::array<std::array<mpq_class, 9>, 8> m;
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 8; ++i) {
      int k = i + j;
      if (k < 8)
        m[k][j] = (*c_)[i];
      else
        m[k - 8][j] = -(*c_)[i];
    }
  }
  for (int i = 0; i < 8; ++i) m[i][8] = (i == 0) ? 1 : 0;
  for (int col = 0; col < 8; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    mpq_class p = m[col][col];
    for (int j = col; j < 9; ++j) m[col][j] /= p;
    for (int r = 0; r < 8; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (int j = col; j < 9; ++j) m[r][j] -= f * m[col][j];
    }
  }
  Coeffs c;
  for (int i = 0; i < 8; ++i) c[i] = m[i][8];
  return from(std::move(c));
}

CycNumber CycNumber::pow(long e) const {
  CycNumber base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycNumber r(1);
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

CycNumber CycNumber::galois(int k) const {
  if (k % 2 == 0) throw DomainError("galois exponent must be odd");
  if (!c_) return {};
  Coeffs r;
  int kk = ((k % 16) + 16) % 16;
  for (int i = 0; i < 8; ++i) {
    if ((*c_)[i] == 0) continue;
    int e = (i * kk) % 16;
    if (e < 8)
      r[e] += (*c_)[i];
    else
      r[e - 8] -= (*c_)[i];
  }
  return from(std::move(r));
}

int CycNumber::as_root_of_unity() const {
  if (!c_) return -1;
  int idx = -1;
  for (int i = 0; i < 8; ++i) {
    if ((*c_)[i] == 0) continue;
    if (idx >= 0) return -1;
    idx = i;
  }
  if ((*c_)[idx] == 1) return idx;
  if ((*c_)[idx] == -1) return idx + 8;
  return -1;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string CycNumber::str() const {
  if (!c_) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 8; ++i) {
    const auto& x = (*c_)[i];
    if (x == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << x.get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return os.str();
}

std::size_t CycNumber::hash() const {
  if (!c_) return 0;
  std::size_t h = 1469598103934665603ull;
  for (const auto& x : *c_) {
    std::size_t v = mpz_get_ui(x.get_num_mpz_t()) * 31 + mpz_get_ui(x.get_den_mpz_t());
    if (mpz_sgn(x.get_num_mpz_t()) < 0) v = ~v;
    h = (h ^ v) * 1099511628211ull;
  }
  return h;
}

CycNumber cyc_mul(const CycNumber& a, const CycNumber& b) { return a * b; }
CycNumber cyc_inv(const CycNumber& a) { return a.inv(); }
CycNumber cyc_root(int order, long exponent) { return CycNumber::root(order, exponent); }

QSqrt2 QSqrt2::pow_sqrt2(long k) {
  long h = k >= 0 ? k / 2 : -((-k + 1) / 2);
  long odd = k - 2 * h;
  mpq_class p(1);
  if (h >= 0) {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, static_cast<unsigned long>(h));
    p = z;
  } else {
    mpz_class z;
    mpz_ui_pow_ui(z.get_mpz_t(), 2, static_cast<unsigned long>(-h));
    p = mpq_class(1) / mpq_class(z);
  }
  if (odd) return {0, p};
  return {p, 0};
}

bool QSqrt2::is_integer() const { return b_ == 0 && a_.get_den() == 1; }

QSqrt2 QSqrt2::inv() const {
  mpq_class n = a_ * a_ - 2 * b_ * b_;
  if (n == 0) throw DomainError("inverse of zero");
  return {a_ / n, -b_ / n};
}

std::string QSqrt2::str() const {
  if (b_ == 0) return a_.get_str();
  std::string s;
  if (a_ != 0) s = a_.get_str() + (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) s = "-";
  mpq_class ab = abs(b_);
  if (ab != 1) s += ab.get_str() + "*";
  s += "sqrt2";
  return s;
}

CycNumber embed_qsqrt2(const QSqrt2& x) {
  CycNumber::Coeffs c;
  c[0] = x.a();
  c[2] = x.b();
  c[6] = -x.b();
  return CycNumber(c);
}

}  // namespace spinmon
