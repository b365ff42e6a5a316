#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spinmon/scalars.hpp"

namespace spinmon {

using Partition = std::vector<int>;

// Strictly decreasing positive parts.
struct StrictPartition {
  std::vector<int> parts;

  // Throws DomainError unless the parts are strictly decreasing and positive.
  explicit StrictPartition(std::vector<int> p);
  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
  int epsilon() const { return (size() - length()) % 2; }
  std::string str() const;
  friend bool operator<(const StrictPartition& a, const StrictPartition& b) { return a.parts < b.parts; }
  friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.parts == b.parts; }
};

std::vector<StrictPartition> strict_partitions(int n);
// Partitions of n with at most max_parts parts, lexicographically decreasing.
std::vector<Partition> partitions(int n, int max_parts);

// Symmetric polynomial in n_vars variables, stored by its coefficients on the
// monomial symmetric functions m_mu (mu a partition with at most n_vars parts).
class SymFun {
 public:
  SymFun() = default;
  explicit SymFun(int n_vars) : n_(n_vars) {}
  static SymFun constant(int n_vars, const QSqrt2& c);
  // m_mu, the orbit sum of x^mu.
  static SymFun monomial(int n_vars, const Partition& mu);

  int n_vars() const { return n_; }
  const std::map<Partition, QSqrt2>& terms() const { return terms_; }
  // Coefficient of x^e for any exponent vector (symmetric lookup).
  QSqrt2 coefficient(std::vector<int> e) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  // Every coefficient is an integer.
  bool integral() const;
  // Number of monomials x^e in the full expansion.
  std::size_t monomial_count() const;
  std::string str() const;
  // FNV-1a hash of the canonical term listing.
  std::string hash() const;

  SymFun operator+(const SymFun& o) const;
  SymFun operator-(const SymFun& o) const;
  SymFun operator-() const { return scaled(QSqrt2(-1)); }
  SymFun operator*(const SymFun& o) const;
  SymFun scaled(const QSqrt2& c) const;
  friend bool operator==(const SymFun& a, const SymFun& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const SymFun& a, const SymFun& b) { return !(a == b); }

 private:
  void add(const Partition& mu, const QSqrt2& c);
  int n_ = 0;
  std::map<Partition, QSqrt2> terms_;
};

// Coefficient of t^k in prod_i (1 + x_i t)/(1 - x_i t).
SymFun q_poly(int k, int n_vars);
// q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}.
SymFun Q_pair(int a, int b, int n_vars);

// Pfaffian by first-row expansion with memoized minors.  Throws DomainError on
// odd size or a matrix that is not skew-symmetric.
template <class R>
R pfaffian(const std::vector<std::vector<R>>& m, const R& zero, const R& one) {
  int n = static_cast<int>(m.size());
  if (n % 2) throw DomainError("Pfaffian needs even size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw DomainError("Pfaffian needs a square matrix");
    for (int j = 0; j < n; ++j)
      if (m[i][j] + m[j][i] != zero) throw DomainError("Pfaffian needs a skew-symmetric matrix");
  }
  std::map<unsigned, R> memo;
  std::function<R(unsigned)> pf = [&](unsigned rest) -> R {
    if (!rest) return one;
    auto it = memo.find(rest);
    if (it != memo.end()) return it->second;
    int first = __builtin_ctz(rest);
    unsigned tail = rest & ~(1u << first);
    R acc = zero;
    int k = 0;
    for (int j = first + 1; j < n; ++j) {
      if (!(tail >> j & 1u)) continue;
      R term = m[first][j] * pf(tail & ~(1u << j));
      if (k % 2)
        acc = acc - term;
      else
        acc = acc + term;
      ++k;
    }
    memo.emplace(rest, acc);
    return acc;
  };
  return pf(n ? (1u << n) - 1 : 0u);
}

// Pf(Q_{(lambda_i, lambda_j)}) with lambda padded by a zero to even length.
SymFun Q_lambda(const StrictPartition& lambda, int n_vars);

// Coefficients on the Q_lambda; throws DomainError with the offending
// partition when f is not in the span.
std::map<StrictPartition, QSqrt2> expand_in_Q_basis(const SymFun& f);

enum class SimpleFlavor { L, N };
// 2^{-floor(l/2)} for L, 2^{(eps - l)/2} for N.
QSqrt2 class_dictionary(const StrictPartition& lambda, SimpleFlavor flavor);
// N_lambda is a queer object iff |lambda| - l(lambda) is odd.
bool is_queer_type(const StrictPartition& lambda);

}  // namespace spinmon
