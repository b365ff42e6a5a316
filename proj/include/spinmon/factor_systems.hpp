#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinmon/scalars.hpp"

namespace spinmon {

// Dense tables over Z/q.  omega1(a; b, c) and omega2(a, b; c) are stored at
// (a*q + b)*q + c, omega_sharp(a, b) at a*q + b.
struct FactorSystem {
  int q = 2;
  int parity = 0;
  std::vector<CycNumber> omega1;
  std::vector<CycNumber> omega2;
  std::optional<std::vector<CycNumber>> omega_sharp;

  long reduce(long a) const { return ((a % q) + q) % q; }
  const CycNumber& w1(long a, long b, long c) const { return omega1[index3(a, b, c)]; }
  const CycNumber& w2(long a, long b, long c) const { return omega2[index3(a, b, c)]; }
  const CycNumber& ws(long a, long b) const { return (*omega_sharp)[reduce(a) * q + reduce(b)]; }
  bool has_sharp() const { return omega_sharp.has_value(); }
  bool is_symmetric() const;
  // Same omega1 and omega2, ignoring parity and omega_sharp.
  bool equal_as_b(const FactorSystem& o) const;
  friend bool operator==(const FactorSystem& a, const FactorSystem& b);

  std::size_t index3(long a, long b, long c) const {
    return static_cast<std::size_t>((reduce(a) * q + reduce(b)) * q + reduce(c));
  }
};

enum class BuiltinFactor { Trivial, A, B, C, D };

std::optional<BuiltinFactor> parse_builtin_factor(std::string_view name);
std::string builtin_factor_name(BuiltinFactor which);
FactorSystem builtin_factor_system(BuiltinFactor which, int q);

// Functions (Z/q)^2 -> k^x, evaluated on least nonnegative residues.
using FactorPhi = std::function<CycNumber(long, long)>;
FactorSystem coboundary(const FactorPhi& phi, int q);

FactorSystem fs_mul(const FactorSystem& x, const FactorSystem& y);
FactorSystem fs_inv(const FactorSystem& x);
FactorSystem with_parity(FactorSystem x, int parity);

struct FactorCheckReport {
  bool pass = true;
  // Violated condition 1..6, or 0 when all hold.
  int condition = 0;
  std::vector<long> witness;
  bool symmetric = false;
  std::string str() const;
};
// Exhaustive over (Z/q)^4 for (1)-(4) and (Z/q)^3 for (5)-(6).
FactorCheckReport fs_check(const FactorSystem& x);

// binom(n, 2) mod 2 on the least nonnegative representative of n mod q.
int binom2_mod2(long n, int q);

CycNumber phi_c(long r, long s);
CycNumber phi_d(long x, long y);
CycNumber phi_a(long n, long m);
CycNumber phi_a_prime(long n, long m);

struct RelationRecord {
  std::string name;
  bool pass = false;
};
struct RelationSuiteReport {
  int q = 0;
  std::vector<RelationRecord> records;
  bool pass() const;
};
// Coboundary identities available at modulus q: D = d(d) always, C = d(c)
// for 4 | q, A = B d(a) on B-components for 8 | q, A = B d(a') for 16 | q.
RelationSuiteReport relation_suite(int q);

}  // namespace spinmon
