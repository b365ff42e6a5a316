#include "spinmon/factor_systems.hpp"

#include <sstream>

namespace spinmon {

namespace {

void require_modulus(int q) {
  if (q < 2 || q % 2) throw DomainError("factor systems need an even modulus q >= 2");
}

FactorSystem blank(int q, int parity, bool sharp) {
  require_modulus(q);
  FactorSystem f;
  f.q = q;
  f.parity = parity & 1;
  std::size_t n3 = static_cast<std::size_t>(q) * q * q;
  f.omega1.assign(n3, CycNumber(1));
  f.omega2.assign(n3, CycNumber(1));
  if (sharp) f.omega_sharp = std::vector<CycNumber>(static_cast<std::size_t>(q) * q, CycNumber(1));
  return f;
}

CycNumber sign_pow(long e) { return e % 2 ? CycNumber(-1) : CycNumber(1); }

// Multiplicative group of values, either CycNumber or exponents of z = zeta16.
struct CycOps {
  using V = CycNumber;
  static V one() { return CycNumber(1); }
  static V mul(const V& a, const V& b) { return a * b; }
  static V inv(const V& a) { return a.inv(); }
  static V neg(const V& a) { return -a; }
};

struct RootOps {
  using V = int;
  static V one() { return 0; }
  static V mul(V a, V b) { return (a + b) % 16; }
  static V inv(V a) { return (16 - a) % 16; }
  static V neg(V a) { return (a + 8) % 16; }
};

template <class Ops>
FactorCheckReport run_check(int q, int parity, const std::vector<typename Ops::V>& t1,
                            const std::vector<typename Ops::V>& t2, const std::vector<typename Ops::V>* ts) {
  using V = typename Ops::V;
  auto r = [q](long a) { return ((a % q) + q) % q; };
  auto w1 = [&](long a, long b, long c) -> const V& { return t1[(r(a) * q + r(b)) * q + r(c)]; };
  auto w2 = [&](long a, long b, long c) -> const V& { return t2[(r(a) * q + r(b)) * q + r(c)]; };
  auto wsh = [&](long a, long b) -> const V& { return (*ts)[r(a) * q + r(b)]; };
  auto m = [](const V& x, const V& y) { return Ops::mul(x, y); };
  FactorCheckReport rep;
  auto fail = [&rep](int cond, std::vector<long> w) {
    rep.pass = false;
    rep.condition = cond;
    rep.witness = std::move(w);
  };
  for (long a = 0; a < q && rep.pass; ++a)
    for (long b = 0; b < q && rep.pass; ++b)
      for (long c = 0; c < q && rep.pass; ++c)
        for (long d = 0; d < q && rep.pass; ++d) {
          if (m(w1(a, b, c), w1(a, b + c, d)) != m(w1(a, b, c + d), w1(a, c, d))) {
            fail(1, {a, b, c, d});
          } else if (m(w2(a + b, c, d), w2(a, b, d)) != m(w2(b, c, d), w2(a, b + c, d))) {
            fail(2, {a, b, c, d});
          } else {
            V lhs = m(m(w1(b, c, d), w1(a, c, d)), Ops::inv(w1(a + b, c, d)));
            V rhs = m(m(w2(a, b, c), w2(a, b, d)), Ops::inv(w2(a, b, c + d)));
            if ((a * b * c * d * parity) % 2) rhs = Ops::neg(rhs);
            if (lhs != rhs) fail(3, {a, b, c, d});
          }
          if (rep.pass && d == 0 &&
              m(w1(a, b, c), Ops::inv(w1(a, c, b))) != m(w2(b, a, c), Ops::inv(w2(a, b, c))))
            fail(4, {a, b, c});
        }
  if (!ts) return rep;
  for (long a = 0; a < q && rep.pass; ++a)
    for (long b = 0; b < q && rep.pass; ++b)
      for (long c = 0; c < q && rep.pass; ++c) {
        if (m(w1(a, b, c), w2(b, c, a)) != m(m(wsh(a, b), wsh(a, c)), Ops::inv(wsh(a, b + c))))
          fail(5, {a, b, c});
        else if (m(w1(c, a, b), w2(a, b, c)) != m(m(wsh(a, c), wsh(b, c)), Ops::inv(wsh(a + b, c))))
          fail(6, {a, b, c});
      }
  return rep;
}

std::optional<std::vector<int>> as_roots(const std::vector<CycNumber>& t) {
  std::vector<int> out;
  out.reserve(t.size());
  for (const auto& x : t) {
    int e = x.as_root_of_unity();
    if (e < 0) return std::nullopt;
    out.push_back(e);
  }
  return out;
}

}  // namespace

bool FactorSystem::is_symmetric() const {
  if (!omega_sharp) return false;
  for (long a = 0; a < q; ++a)
    for (long b = a + 1; b < q; ++b)
      if (ws(a, b) != ws(b, a)) return false;
  return true;
}

bool FactorSystem::equal_as_b(const FactorSystem& o) const {
  return q == o.q && omega1 == o.omega1 && omega2 == o.omega2;
}

bool operator==(const FactorSystem& a, const FactorSystem& b) {
  return a.equal_as_b(b) && a.parity == b.parity && a.omega_sharp == b.omega_sharp;
}

std::optional<BuiltinFactor> parse_builtin_factor(std::string_view name) {
  if (name == "trivial") return BuiltinFactor::Trivial;
  if (name == "A") return BuiltinFactor::A;
  if (name == "B") return BuiltinFactor::B;
  if (name == "C") return BuiltinFactor::C;
  if (name == "D") return BuiltinFactor::D;
  return std::nullopt;
}

std::string builtin_factor_name(BuiltinFactor which) {
  switch (which) {
    case BuiltinFactor::Trivial: return "trivial";
    case BuiltinFactor::A: return "A";
    case BuiltinFactor::B: return "B";
    case BuiltinFactor::C: return "C";
    case BuiltinFactor::D: return "D";
  }
  return "?";
}

int binom2_mod2(long n, int q) {
  long r = ((n % q) + q) % q;
  return static_cast<int>((r * (r - 1) / 2) % 2);
}

FactorSystem builtin_factor_system(BuiltinFactor which, int q) {
  require_modulus(q);
  if (which == BuiltinFactor::A && q % 4) throw DomainError("factor system A needs 4 | q");
  bool odd = which == BuiltinFactor::A || which == BuiltinFactor::B;
  FactorSystem f = blank(q, odd ? 1 : 0, true);
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b) {
      for (long c = 0; c < q; ++c) {
        std::size_t i = f.index3(a, b, c);
        switch (which) {
          case BuiltinFactor::Trivial: break;
          case BuiltinFactor::A: f.omega2[i] = sign_pow(binom2_mod2(c, q) * a * b); break;
          case BuiltinFactor::B:
            if (a % 2 && b % 2 && c % 2) f.omega2[i] = cyc_root(4, 1);
            break;
          case BuiltinFactor::C:
          case BuiltinFactor::D:
            f.omega1[i] = sign_pow(a * b * c);
            f.omega2[i] = sign_pow(a * b * c);
            break;
        }
      }
      CycNumber& s = (*f.omega_sharp)[a * q + b];
      if (which == BuiltinFactor::A) s = sign_pow(binom2_mod2(a, q) * binom2_mod2(b, q));
      if (which == BuiltinFactor::B && a % 2 && b % 2) s = cyc_root(8, 1);
      if (which == BuiltinFactor::D) s = sign_pow(a * b);
    }
  return f;
}

FactorSystem coboundary(const FactorPhi& phi, int q) {
  require_modulus(q);
  std::vector<CycNumber> table(static_cast<std::size_t>(q) * q);
  for (long r = 0; r < q; ++r)
    for (long s = 0; s < q; ++s) {
      CycNumber v = phi(r, s);
      if (v.is_zero()) throw DomainError("coboundary needs nonzero values");
      table[r * q + s] = v;
    }
  std::vector<CycNumber> inv(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) inv[i] = table[i].inv();
  auto at = [&](const std::vector<CycNumber>& t, long r, long s) -> const CycNumber& { return t[(r % q) * q + s % q]; };
  FactorSystem f = blank(q, 0, true);
  for (long r = 0; r < q; ++r)
    for (long s = 0; s < q; ++s) {
      for (long t = 0; t < q; ++t) {
        std::size_t i = f.index3(r, s, t);
        f.omega1[i] = at(table, r, s + t) * at(inv, r, s) * at(inv, r, t);
        f.omega2[i] = at(table, r + s, t) * at(inv, r, t) * at(inv, s, t);
      }
      (*f.omega_sharp)[r * q + s] = at(inv, r, s) * at(inv, s, r);
    }
  return f;
}

FactorSystem fs_mul(const FactorSystem& x, const FactorSystem& y) {
  if (x.q != y.q) throw DomainError("factor system modulus mismatch");
  FactorSystem f = x;
  f.parity = (x.parity + y.parity) % 2;
  for (std::size_t i = 0; i < f.omega1.size(); ++i) {
    f.omega1[i] *= y.omega1[i];
    f.omega2[i] *= y.omega2[i];
  }
  if (x.omega_sharp && y.omega_sharp)
    for (std::size_t i = 0; i < f.omega_sharp->size(); ++i) (*f.omega_sharp)[i] *= (*y.omega_sharp)[i];
  else
    f.omega_sharp.reset();
  return f;
}

FactorSystem fs_inv(const FactorSystem& x) {
  FactorSystem f = x;
  for (auto& v : f.omega1) v = v.inv();
  for (auto& v : f.omega2) v = v.inv();
  if (f.omega_sharp)
    for (auto& v : *f.omega_sharp) v = v.inv();
  return f;
}

FactorSystem with_parity(FactorSystem x, int parity) {
  x.parity = parity & 1;
  return x;
}

std::string FactorCheckReport::str() const {
  if (pass) return "pass";
  std::ostringstream os;
  os << "fail: condition (" << condition << ") at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
  os << ")";
  return os.str();
}

FactorCheckReport fs_check(const FactorSystem& x) {
  for (const auto* t : {&x.omega1, &x.omega2})
    for (const auto& v : *t)
      if (v.is_zero()) return {false, 0, {}, false};
  FactorCheckReport rep;
  auto r1 = as_roots(x.omega1), r2 = as_roots(x.omega2);
  std::optional<std::vector<int>> rs;
  if (x.omega_sharp) rs = as_roots(*x.omega_sharp);
  if (r1 && r2 && (!x.omega_sharp || rs))
    rep = run_check<RootOps>(x.q, x.parity, *r1, *r2, rs ? &*rs : nullptr);
  else
    rep = run_check<CycOps>(x.q, x.parity, x.omega1, x.omega2, x.omega_sharp ? &*x.omega_sharp : nullptr);
  rep.symmetric = x.is_symmetric();
  return rep;
}

CycNumber phi_c(long r, long s) { return sign_pow((r * s) * (r * s - 1) / 2); }

CycNumber phi_d(long x, long y) { return x % 2 && y % 2 ? cyc_root(4, 1) : CycNumber(1); }

CycNumber phi_a(long n, long m) {
  long eps = n % 4 == 3 ? m : 0;
  long b = n * (n - 1) / 2;
  return sign_pow(eps) * cyc_root(4, -((b * m) % 4));
}

CycNumber phi_a_prime(long n, long m) { return phi_a(n, m) * cyc_root(16, (n * m) % 16); }

bool RelationSuiteReport::pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return !records.empty();
}

RelationSuiteReport relation_suite(int q) {
  require_modulus(q);
  RelationSuiteReport rep;
  rep.q = q;
  FactorSystem d = builtin_factor_system(BuiltinFactor::D, q);
  rep.records.push_back({"D = d(phi_d)", coboundary(phi_d, q) == d});
  if (q % 4 == 0) {
    FactorSystem c = builtin_factor_system(BuiltinFactor::C, q);
    rep.records.push_back({"C = d(phi_c)", coboundary(phi_c, q) == c});
  }
  if (q % 8 == 0) {
    FactorSystem a = builtin_factor_system(BuiltinFactor::A, q);
    FactorSystem b = builtin_factor_system(BuiltinFactor::B, q);
    rep.records.push_back({"A = B d(phi_a) on (omega1, omega2)", a.equal_as_b(fs_mul(b, coboundary(phi_a, q)))});
    if (q % 16 == 0) {
      FactorSystem prod = fs_mul(b, coboundary(phi_a_prime, q));
      rep.records.push_back({"A = B d(phi_a') with omega_sharp", prod == a});
    }
  }
  return rep;
}

}  // namespace spinmon
