#pragma once

#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinmon/factor_systems.hpp"
#include "spinmon/scalars.hpp"
#include "spinmon/spin_group.hpp"
#include "spinmon/supervec.hpp"

namespace spinmon {

// Factor-system scalars as functions of degrees.  q = 0 means Z-graded.
struct FactorScalars {
  std::string name;
  int q = 0;
  int parity = 0;
  std::function<CycNumber(long, long, long)> w1;
  std::function<CycNumber(long, long, long)> w2;
  std::function<CycNumber(long, long)> ws;

  bool has_sharp() const { return static_cast<bool>(ws); }
  static FactorScalars from_table(const FactorSystem& f, std::string name);
  static FactorScalars builtin(BuiltinFactor which, int q);
  // Closed forms on integer degrees.
  static FactorScalars closed_form(BuiltinFactor which);
  FactorScalars operator*(const FactorScalars& o) const;
  FactorScalars inverse() const;
};

enum class BraidingKind { Ordinary, TypeI, TypeII };
std::string braiding_kind_name(BraidingKind kind);

struct AxiomRecord {
  std::string instance;
  std::string check;
  std::vector<std::string> tuple;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct AxiomReport {
  std::vector<AxiomRecord> records;

  bool pass() const;
  std::size_t failures() const;
  const AxiomRecord* first_failure() const;
  void append(const AxiomReport& o);
  std::size_t count(const std::string& check) const;
};

template <class O, class M>
struct Generator {
  O src;
  O dst;
  M f;
  std::string name;
};

template <class I>
concept CatInstance = requires(const I& c, const typename I::Object& x, const typename I::Morphism& f,
                               const CycNumber& s, const std::vector<typename I::Object>& tuple) {
  { c.name() } -> std::convertible_to<std::string>;
  { c.modulus() } -> std::convertible_to<int>;
  { c.objects() } -> std::convertible_to<std::vector<typename I::Object>>;
  { c.admissible(tuple) } -> std::convertible_to<bool>;
  { c.unit() } -> std::convertible_to<typename I::Object>;
  { c.degree(x) } -> std::convertible_to<long>;
  { c.label(x) } -> std::convertible_to<std::string>;
  { c.tensor(x, x) } -> std::convertible_to<typename I::Object>;
  { c.tensor(f, f) } -> std::convertible_to<typename I::Morphism>;
  { c.compose(f, f) } -> std::convertible_to<typename I::Morphism>;
  { c.identity(x) } -> std::convertible_to<typename I::Morphism>;
  { c.associator(x, x, x) } -> std::convertible_to<typename I::Morphism>;
  { c.associator_inverse(x, x, x) } -> std::convertible_to<typename I::Morphism>;
  { c.left_unitor(x) } -> std::convertible_to<typename I::Morphism>;
  { c.right_unitor(x) } -> std::convertible_to<typename I::Morphism>;
  { c.parity(f) } -> std::convertible_to<int>;
  { c.scaled(f, s) } -> std::convertible_to<typename I::Morphism>;
  { c.ratio(f, f) } -> std::convertible_to<std::optional<CycNumber>>;
  { c.generators() } -> std::convertible_to<std::vector<Generator<typename I::Object, typename I::Morphism>>>;
};

// pi(x, n) is Pi^n(x); xi(x, n, m) is xi^{n,m}_x : Pi^n(x) -> Pi^m(x).
template <class I>
concept PiCatInstance = CatInstance<I> && requires(const I& c, const typename I::Object& x, long n) {
  { c.pi(x, n) } -> std::convertible_to<typename I::Object>;
  { c.xi(x, n, n) } -> std::convertible_to<typename I::Morphism>;
};

// Type I maps send A (x) B to Pi^{|A||B|}(B) (x) A.
template <class I>
struct Braiding {
  using Object = typename I::Object;
  using Morphism = typename I::Morphism;
  BraidingKind kind = BraidingKind::TypeII;
  std::function<Morphism(const Object&, const Object&)> map;
  FactorScalars factor;
};

namespace axioms_detail {

inline long pow_sign_exp(long e) { return ((e % 2) + 2) % 2; }
inline CycNumber sign(long e) { return CycNumber(pow_sign_exp(e) ? -1 : 1); }

template <class I>
AxiomRecord compare(const I& c, const char* check, std::vector<std::string> tuple, const typename I::Morphism& lhs,
                    const typename I::Morphism& rhs, const CycNumber& expected) {
  std::optional<CycNumber> r = c.ratio(lhs, rhs);
  AxiomRecord rec;
  rec.instance = c.name();
  rec.check = check;
  rec.tuple = std::move(tuple);
  rec.expected = expected.str();
  rec.got = r ? r->str() : "not proportional";
  rec.pass = r && *r == expected;
  return rec;
}

template <class I, class F>
void for_tuples(const I& c, int k, F&& fn) {
  using Object = typename I::Object;
  std::vector<Object> objs = c.objects();
  std::vector<Object> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (const Object& x : objs) {
      cur.push_back(x);
      if (c.admissible(cur)) rec();
      cur.pop_back();
    }
  };
  rec();
}

template <class I>
std::vector<std::string> labels(const I& c, const std::vector<typename I::Object>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(c.label(x));
  return out;
}

template <class I>
long pi_exponent(const I& c, const typename I::Object& a, const typename I::Object& b) {
  return c.degree(a) * c.degree(b);
}

template <class I>
void require_pi() {
  if constexpr (!PiCatInstance<I>) throw DomainError("instance has no Pi-structure");
}

}  // namespace axioms_detail

// alpha_{AB,C,D} alpha_{A,B,CD} = (alpha_{A,B,C} (x) 1) alpha_{A,BC,D} (1 (x) alpha_{B,C,D}).
template <CatInstance I>
AxiomRecord pentagon_record(const I& c, const std::vector<typename I::Object>& t) {
  const auto &a = t[0], &b = t[1], &cc = t[2], &d = t[3];
  auto lhs = c.compose(c.associator(c.tensor(a, b), cc, d), c.associator(a, b, c.tensor(cc, d)));
  auto rhs = c.compose(c.tensor(c.associator(a, b, cc), c.identity(d)),
                       c.compose(c.associator(a, c.tensor(b, cc), d), c.tensor(c.identity(a), c.associator(b, cc, d))));
  return axioms_detail::compare(c, "pentagon", axioms_detail::labels(c, t), lhs, rhs, CycNumber(1));
}

template <CatInstance I>
AxiomReport check_pentagon(const I& c) {
  AxiomReport rep;
  axioms_detail::for_tuples(c, 4, [&](const auto& t) { rep.records.push_back(pentagon_record(c, t)); });
  return rep;
}

// (rho_A (x) 1) alpha_{A,1,B} = 1 (x) lambda_B.
template <CatInstance I>
AxiomReport check_triangle(const I& c) {
  AxiomReport rep;
  axioms_detail::for_tuples(c, 2, [&](const auto& t) {
    const auto &a = t[0], &b = t[1];
    auto lhs = c.compose(c.tensor(c.right_unitor(a), c.identity(b)), c.associator(a, c.unit(), b));
    auto rhs = c.tensor(c.identity(a), c.left_unitor(b));
    rep.records.push_back(axioms_detail::compare(c, "triangle", axioms_detail::labels(c, t), lhs, rhs, CycNumber(1)));
  });
  return rep;
}

// Pi^k(g) = (-1)^{k|g|} xi^{0,k} g xi^{k,0}.
template <PiCatInstance I>
typename I::Morphism pi_power_map(const I& c, const typename I::Object& src, const typename I::Object& dst,
                                  const typename I::Morphism& g, long k) {
  auto m = c.compose(c.xi(dst, 0, k), c.compose(g, c.xi(src, k, 0)));
  return c.scaled(m, axioms_detail::sign(k * c.parity(g)));
}

// Type II: (g (x) f) beta = (-1)^{|A||B|(|f|+|g|) + |f||g|} beta (f (x) g).
// Ordinary: sign (-1)^{|f||g|}.  Type I: (Pi^{ab}(g) (x) f) beta = (-1)^{|f||g|} beta (f (x) g).
template <CatInstance I>
AxiomReport check_naturality(const I& c, const Braiding<I>& br) {
  using namespace axioms_detail;
  AxiomReport rep;
  auto gens = c.generators();
  for (const auto& f : gens)
    for (const auto& g : gens) {
      std::vector<typename I::Object> objs{f.src, g.src};
      std::vector<typename I::Object> objs2{f.dst, g.dst};
      if (!c.admissible(objs) || !c.admissible(objs2)) continue;
      int pf = c.parity(f.f), pg = c.parity(g.f);
      long ab = pi_exponent(c, f.src, g.src);
      auto rhs = c.compose(br.map(f.dst, g.dst), c.tensor(f.f, g.f));
      typename I::Morphism lhs;
      CycNumber expected = sign(static_cast<long>(pf) * pg);
      if (br.kind == BraidingKind::TypeI) {
        if constexpr (PiCatInstance<I>) {
          lhs = c.compose(c.tensor(pi_power_map(c, g.src, g.dst, g.f, ab), f.f), br.map(f.src, g.src));
        } else {
          throw DomainError("type I braiding needs a Pi-structure");
        }
      } else {
        lhs = c.compose(c.tensor(g.f, f.f), br.map(f.src, g.src));
        if (br.kind == BraidingKind::TypeII) expected = sign(ab * (pf + pg) + static_cast<long>(pf) * pg);
      }
      rep.records.push_back(compare(c, "naturality", {f.name, g.name}, lhs, rhs, expected));
    }
  return rep;
}

// Ordinary and type II hexagons for one triple.
template <CatInstance I>
std::vector<AxiomRecord> hexagon_records(const I& c, const Braiding<I>& br, const std::vector<typename I::Object>& t) {
  using namespace axioms_detail;
  const auto &A = t[0], &B = t[1], &C = t[2];
  long a = c.degree(A), b = c.degree(B), cd = c.degree(C);
  auto top1 = c.compose(c.associator_inverse(B, C, A),
                        c.compose(br.map(A, c.tensor(B, C)), c.associator_inverse(A, B, C)));
  auto bot1 = c.compose(c.tensor(c.identity(B), br.map(A, C)),
                        c.compose(c.associator_inverse(B, A, C), c.tensor(br.map(A, B), c.identity(C))));
  auto top2 = c.compose(c.associator(C, A, B), c.compose(br.map(c.tensor(A, B), C), c.associator(A, B, C)));
  auto bot2 = c.compose(c.tensor(br.map(A, C), c.identity(B)),
                        c.compose(c.associator(A, C, B), c.tensor(c.identity(A), br.map(B, C))));
  return {compare(c, "hexagon H1", labels(c, t), bot1, top1, br.factor.w1(a, b, cd)),
          compare(c, "hexagon H2", labels(c, t), bot2, top2, br.factor.w2(a, b, cd))};
}

// Ordinary and type II hexagons: bottom = omega1(a; b, c) top and bottom = omega2(a, b; c) top.
template <CatInstance I>
AxiomReport check_hexagons(const I& c, const Braiding<I>& br) {
  using namespace axioms_detail;
  AxiomReport rep;
  if (br.kind == BraidingKind::TypeI) {
    require_pi<I>();
    if constexpr (PiCatInstance<I>) {
      for_tuples(c, 3, [&](const auto& t) {
        const auto &A = t[0], &B = t[1], &C = t[2];
        long a = c.degree(A), b = c.degree(B), cd = c.degree(C);
        auto BC = c.tensor(B, C);
        {
          // H1': (AB)C -> Pi^{x+y}(B) (x) (C A), x = |A||B|, y = |A||C|.
          long x = pi_exponent(c, A, B), y = pi_exponent(c, A, C), e = pi_exponent(c, A, BC);
          auto PB = c.pi(B, x + y);
          auto canon = c.compose(c.tensor(c.xi(B, 0, x + y), c.identity(C)), c.xi(BC, x + y, 0));
          auto top = c.compose(c.tensor(c.xi(BC, e, x + y), c.identity(A)),
                               c.compose(br.map(A, BC), c.associator_inverse(A, B, C)));
          top = c.compose(c.associator_inverse(PB, C, A), c.compose(c.tensor(canon, c.identity(A)), top));
          auto PxB = c.pi(B, x);
          auto bottom = c.compose(c.associator_inverse(PxB, A, C), c.tensor(br.map(A, B), c.identity(C)));
          bottom = c.compose(c.tensor(c.identity(PxB), br.map(A, C)), bottom);
          auto psi2 = c.tensor(c.xi(B, x, x + y), c.tensor(c.xi(C, y, 0), c.identity(A)));
          bottom = c.compose(psi2, bottom);
          rep.records.push_back(compare(c, "hexagon H1", labels(c, t), bottom, top, br.factor.w1(a, b, cd)));
        }
        {
          // H2': A(BC) -> (Pi^{x+y}(C) (x) A) (x) B, x = |A||C|, y = |B||C|.
          long x = pi_exponent(c, A, C), y = pi_exponent(c, B, C);
          auto AB = c.tensor(A, B);
          long e = pi_exponent(c, AB, C);
          auto top = c.compose(c.tensor(c.xi(C, e, x + y), c.identity(AB)),
                               c.compose(br.map(AB, C), c.associator(A, B, C)));
          top = c.compose(c.associator(c.pi(C, x + y), A, B), top);
          auto PyC = c.pi(C, y);
          auto bottom = c.compose(c.associator(A, PyC, B), c.tensor(c.identity(A), br.map(B, C)));
          long e2 = pi_exponent(c, A, PyC);
          auto step = c.compose(c.tensor(c.xi(PyC, e2, x), c.identity(A)), br.map(A, PyC));
          bottom = c.compose(c.tensor(step, c.identity(B)), bottom);
          rep.records.push_back(compare(c, "hexagon H2", labels(c, t), bottom, top, br.factor.w2(a, b, cd)));
        }
      });
    }
    return rep;
  }
  for_tuples(c, 3, [&](const auto& t) {
    for (auto& r : hexagon_records(c, br, t)) rep.records.push_back(std::move(r));
  });
  return rep;
}

// Type II and ordinary: beta_{B,A} beta_{A,B} = omega#(a, b) id.
// Type I: beta_{Pi^{ab}B, A} beta_{A,B} = omega#(a, b) (xi^{0,ab} (x) xi^{0,ab}).
template <CatInstance I>
AxiomRecord symmetry_record(const I& c, const Braiding<I>& br, const std::vector<typename I::Object>& t) {
  using namespace axioms_detail;
  if (!br.factor.has_sharp()) throw DomainError("symmetry check needs omega_sharp");
  const auto &A = t[0], &B = t[1];
  CycNumber expected = br.factor.ws(c.degree(A), c.degree(B));
  if (br.kind == BraidingKind::TypeI) {
    if constexpr (PiCatInstance<I>) {
      long e = pi_exponent(c, A, B);
      auto PB = c.pi(B, e);
      long e2 = pi_exponent(c, PB, A);
      auto lhs = c.compose(c.tensor(c.xi(A, e2, e), c.identity(PB)), c.compose(br.map(PB, A), br.map(A, B)));
      auto rhs = c.tensor(c.xi(A, 0, e), c.xi(B, 0, e));
      return compare(c, "symmetry", labels(c, t), lhs, rhs, expected);
    } else {
      throw DomainError("type I braiding needs a Pi-structure");
    }
  }
  auto lhs = c.compose(br.map(B, A), br.map(A, B));
  return compare(c, "symmetry", labels(c, t), lhs, c.identity(c.tensor(A, B)), expected);
}

template <CatInstance I>
AxiomReport check_symmetry(const I& c, const Braiding<I>& br) {
  AxiomReport rep;
  axioms_detail::for_tuples(c, 2, [&](const auto& t) { rep.records.push_back(symmetry_record(c, br, t)); });
  return rep;
}

template <CatInstance I>
AxiomReport check_all(const I& c, const Braiding<I>& br) {
  AxiomReport rep = check_pentagon(c);
  rep.append(check_triangle(c));
  rep.append(check_naturality(c, br));
  rep.append(check_hexagons(c, br));
  if (br.factor.has_sharp()) rep.append(check_symmetry(c, br));
  return rep;
}

// beta'_{A,B} = (xi^{0,ab}_B (x) id_A) beta_{A,B} with factor C omega on the
// B-components and D omega on omega_sharp.
template <CatInstance I>
Braiding<I> convert_II_to_I(const I& c, const Braiding<I>& br) {
  axioms_detail::require_pi<I>();
  if (br.kind != BraidingKind::TypeII) throw DomainError("conversion needs a type II braiding");
  Braiding<I> out;
  if constexpr (PiCatInstance<I>) {
    out.kind = BraidingKind::TypeI;
    out.map = [&c, br](const typename I::Object& A, const typename I::Object& B) {
      long e = axioms_detail::pi_exponent(c, A, B);
      return c.compose(c.tensor(c.xi(B, 0, e), c.identity(A)), br.map(A, B));
    };
    int q = br.factor.q;
    FactorScalars cf = q ? FactorScalars::builtin(BuiltinFactor::C, q) : FactorScalars::closed_form(BuiltinFactor::C);
    FactorScalars df = q ? FactorScalars::builtin(BuiltinFactor::D, q) : FactorScalars::closed_form(BuiltinFactor::D);
    cf.ws = df.ws;
    cf.name = "C|D";
    out.factor = cf * br.factor;
  }
  return out;
}

template <CatInstance I>
Braiding<I> convert_I_to_II(const I& c, const Braiding<I>& br) {
  axioms_detail::require_pi<I>();
  if (br.kind != BraidingKind::TypeI) throw DomainError("conversion needs a type I braiding");
  Braiding<I> out;
  if constexpr (PiCatInstance<I>) {
    out.kind = BraidingKind::TypeII;
    out.map = [&c, br](const typename I::Object& A, const typename I::Object& B) {
      long e = axioms_detail::pi_exponent(c, A, B);
      return c.compose(c.tensor(c.xi(B, e, 0), c.identity(A)), br.map(A, B));
    };
    int q = br.factor.q;
    FactorScalars cf = q ? FactorScalars::builtin(BuiltinFactor::C, q) : FactorScalars::closed_form(BuiltinFactor::C);
    FactorScalars df = q ? FactorScalars::builtin(BuiltinFactor::D, q) : FactorScalars::closed_form(BuiltinFactor::D);
    cf.ws = df.ws;
    cf.name = "C|D";
    out.factor = cf.inverse() * br.factor;
  }
  return out;
}

// Compares two braidings object pair by object pair.
template <CatInstance I>
AxiomReport compare_braidings(const I& c, const Braiding<I>& x, const Braiding<I>& y) {
  AxiomReport rep;
  axioms_detail::for_tuples(c, 2, [&](const auto& t) {
    rep.records.push_back(axioms_detail::compare(c, "braiding table", axioms_detail::labels(c, t), x.map(t[0], t[1]),
                                                 y.map(t[0], t[1]), CycNumber(1)));
  });
  return rep;
}

template <class M>
struct BraidAction {
  std::vector<M> sigma;  // sigma[i - 1] = sigma_i
  AxiomReport report;
};

// sigma_i = id (x) beta_{X,X} (x) id on X^{(x) n} for a strict type II instance with 4 | q.
// Relations: far commutation up to (-1)^p, the plain braid relation, sigma_i^2 = (-1)^{binom(p,2)},
// and sigma_i f^{(x) n} = (-1)^{|f|(1 + p n)} f^{(x) n} sigma_i for endomorphisms f of X.
template <CatInstance I>
BraidAction<typename I::Morphism> braid_action(const I& c, const Braiding<I>& br, const typename I::Object& X, int n) {
  using namespace axioms_detail;
  using M = typename I::Morphism;
  if (br.kind != BraidingKind::TypeII) throw DomainError("braid action needs a type II braiding");
  if (c.modulus() % 4) throw DomainError("braid action needs 4 | q");
  if (!c.is_strict()) throw DomainError("braid action needs a strict instance");
  if (n < 2) throw DomainError("braid action needs n >= 2");
  long p = c.degree(X);
  auto power = [&](int k) {
    auto obj = c.unit();
    for (int i = 0; i < k; ++i) obj = c.tensor(obj, X);
    return obj;
  };
  BraidAction<M> out;
  for (int i = 1; i < n; ++i) {
    M s = c.tensor(c.tensor(c.identity(power(i - 1)), br.map(X, X)), c.identity(power(n - i - 1)));
    out.sigma.push_back(s);
  }
  std::string lx = c.label(X);
  auto tag = [&](int i, int j) { return std::vector<std::string>{lx, std::to_string(n), std::to_string(i), std::to_string(j)}; };
  for (int i = 1; i < n; ++i) {
    const M& si = out.sigma[i - 1];
    out.report.records.push_back(compare(c, "braid square", tag(i, i), c.compose(si, si), c.identity(power(n)),
                                         sign((p * (p - 1) / 2))));
    if (i + 1 < n) {
      const M& sj = out.sigma[i];
      M l = c.compose(si, c.compose(sj, si));
      M r = c.compose(sj, c.compose(si, sj));
      out.report.records.push_back(compare(c, "braid relation", tag(i, i + 1), l, r, CycNumber(1)));
    }
    for (int j = i + 2; j < n; ++j) {
      const M& sj = out.sigma[j - 1];
      out.report.records.push_back(
          compare(c, "braid commutation", tag(i, j), c.compose(si, sj), c.compose(sj, si), sign(p)));
    }
  }
  for (const auto& g : c.generators()) {
    if (!(c.label(g.src) == lx && c.label(g.dst) == lx)) continue;
    M fn = g.f;
    for (int k = 1; k < n; ++k) fn = c.tensor(fn, g.f);
    long pf = c.parity(g.f);
    for (int i = 1; i < n; ++i) {
      const M& si = out.sigma[i - 1];
      out.report.records.push_back(compare(c, "braid naturality", {g.name, std::to_string(n), std::to_string(i)},
                                           c.compose(si, fn), c.compose(fn, si), sign(pf * (1 + p * n))));
    }
  }
  return out;
}

// Replaces beta_{A,B} by its negative for the given pair of labels.
template <CatInstance I>
Braiding<I> flip_braiding_sign(const I& c, Braiding<I> br, const std::string& a, const std::string& b) {
  auto base = br.map;
  br.map = [&c, base, a, b](const typename I::Object& x, const typename I::Object& y) {
    auto m = base(x, y);
    if (c.label(x) == a && c.label(y) == b) return c.scaled(m, CycNumber(-1));
    return m;
  };
  return br;
}

// Rescales a braiding by phi(|A|, |B|); the factor becomes omega d(phi)^{-1}.
template <CatInstance I>
Braiding<I> rescale_braiding(const I& c, Braiding<I> br, const FactorPhi& phi, FactorScalars factor) {
  auto base = br.map;
  br.map = [&c, base, phi](const typename I::Object& x, const typename I::Object& y) {
    return c.scaled(base(x, y), phi(c.degree(x), c.degree(y)));
  };
  br.factor = std::move(factor);
  return br;
}

// Category S~: objects [n], End([n]) = k[S~_n]/(c+1), tensor through j_{n,m}.
class StildeInstance {
 public:
  using Object = int;
  using Morphism = TgaElement;

  // q = 0 grades by Z.  Tuples are limited to total rank <= max_rank.
  StildeInstance(int q, int max_rank);

  std::string name() const { return "stilde"; }
  int modulus() const { return q_; }
  int max_rank() const { return max_rank_; }
  std::vector<Object> objects() const;
  bool admissible(const std::vector<Object>& xs) const;
  Object unit() const { return 0; }
  long degree(Object n) const { return q_ ? n % q_ : n; }
  std::string label(Object n) const { return "[" + std::to_string(n) + "]"; }
  Object tensor(Object a, Object b) const { return a + b; }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return tga_tensor(f.rank(), g.rank(), f, g); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return g * f; }
  Morphism identity(Object n) const { return TgaElement::scalar(n, CycNumber(1)); }
  Morphism associator(Object a, Object b, Object c) const { return identity(a + b + c); }
  Morphism associator_inverse(Object a, Object b, Object c) const { return identity(a + b + c); }
  Morphism left_unitor(Object a) const { return identity(a); }
  Morphism right_unitor(Object a) const { return identity(a); }
  bool is_strict() const { return true; }
  int parity(const Morphism& f) const;
  Morphism scaled(const Morphism& f, const CycNumber& s) const { return f.scaled(s); }
  std::optional<CycNumber> ratio(const Morphism& x, const Morphism& y) const;
  std::vector<Generator<Object, Morphism>> generators() const;

  // beta_{n,m} = tau~_{n,m}, type II with factor A (needs 4 | q, or q = 0).
  Braiding<StildeInstance> braiding() const;
  // beta'_{n,m} = a'(n, m) tau~_{n,m} on integer ranks, type II with factor B.
  Braiding<StildeInstance> rescaled_braiding() const;

 private:
  int q_;
  int max_rank_;
};

// Super vector spaces with a Z/q-grading independent of parity, tensor with
// the canonical associator, neutral Pi and an ordinary or type II symmetry.
struct SVecObject {
  SuperSpace base;
  long pi_exp = 0;
  long degree = 0;
  std::string name;

  SuperSpace space() const { return pi(base, static_cast<int>(((pi_exp % 2) + 2) % 2)); }
};

class SVecInstance {
 public:
  using Object = SVecObject;
  using Morphism = SuperMap;

  SVecInstance(int q, std::vector<SVecObject> objects, std::size_t max_arity = 4);

  std::string name() const { return "svec"; }
  int modulus() const { return q_; }
  std::vector<Object> objects() const { return objects_; }
  bool admissible(const std::vector<Object>& xs) const { return xs.size() <= max_arity_; }
  Object unit() const;
  long degree(const Object& x) const { return q_ ? ((x.degree % q_) + q_) % q_ : x.degree; }
  std::string label(const Object& x) const;
  Object tensor(const Object& a, const Object& b) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const { return tensor_map(f, g); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return g * f; }
  Morphism identity(const Object& x) const { return SuperMap::identity(x.space()); }
  Morphism associator(const Object& a, const Object& b, const Object& c) const;
  Morphism associator_inverse(const Object& a, const Object& b, const Object& c) const;
  Morphism left_unitor(const Object& a) const { return identity(a); }
  Morphism right_unitor(const Object& a) const { return identity(a); }
  bool is_strict() const { return false; }
  int parity(const Morphism& f) const { return f.parity; }
  Morphism scaled(const Morphism& f, const CycNumber& s) const { return f.scaled(s); }
  std::optional<CycNumber> ratio(const Morphism& x, const Morphism& y) const;
  std::vector<Generator<Object, Morphism>> generators() const { return generators_; }
  void add_generator(const Object& src, const Object& dst, const SuperMap& f, std::string name);

  Object pi(const Object& x, long n) const;
  Morphism xi(const Object& x, long n, long m) const;

  // tau, ordinary, trivial factor.
  Braiding<SVecInstance> symmetry() const;

 private:
  int q_;
  std::vector<SVecObject> objects_;
  std::size_t max_arity_;
  std::vector<Generator<Object, Morphism>> generators_;
};

// Matrix of A (x) (B (x) C) -> (A (x) B) (x) C in the tensor_space bases.
SuperMap tensor_associator(const SuperSpace& a, const SuperSpace& b, const SuperSpace& c);

// Ratio for super maps: x = r y, nullopt when shapes differ or x is not a multiple.
std::optional<CycNumber> map_ratio(const SuperMap& x, const SuperMap& y);

}  // namespace spinmon
