#include <random>

#include "doctest.h"
#include "spinmon/factor_systems.hpp"

using namespace spinmon;

namespace {

FactorSystem builtin(const char* name, int q) { return builtin_factor_system(*parse_builtin_factor(name), q); }

}  // namespace

TEST_CASE("builtin examples") {
  CHECK(builtin("A", 4).w2(1, 1, 2) == CycNumber(-1));
  CHECK(builtin("A", 4).w2(1, 1, 1) == CycNumber(1));
  CHECK(builtin("B", 2).w2(1, 1, 1) == cyc_root(4, 1));
  CHECK(builtin("B", 2).ws(1, 1) == cyc_root(8, 1));
  CHECK(builtin("D", 2).ws(1, 1) == CycNumber(-1));
  CHECK(builtin("C", 2).ws(1, 1) == CycNumber(1));
  CHECK(builtin("A", 4).parity == 1);
  CHECK(builtin("B", 4).parity == 1);
  CHECK(builtin("C", 4).parity == 0);
  CHECK_THROWS_AS(builtin("A", 2), DomainError);
  CHECK_THROWS_AS(builtin("A", 6), DomainError);
  CHECK_THROWS_AS(builtin("C", 3), DomainError);
  CHECK_FALSE(parse_builtin_factor("E").has_value());
}

TEST_CASE("binomial parity is well defined modulo q when 4 | q") {
  for (int q : {4, 8, 16})
    for (long n = 0; n < q; ++n)
      for (long k = -3; k <= 3; ++k) {
        long m = n + k * q;
        long direct = ((m * (m - 1) / 2) % 2 + 2) % 2;
        REQUIRE(binom2_mod2(m, q) == direct);
      }
  // Fails for q = 2: 1 and 3 differ.
  CHECK(binom2_mod2(1, 2) == binom2_mod2(3, 2));
  CHECK((3 * 2 / 2) % 2 != 0);
}

TEST_CASE("every builtin passes at its declared parity") {
  for (int q : {2, 4, 8, 16})
    for (const char* name : {"trivial", "A", "B", "C", "D"}) {
      if (std::string(name) == "A" && q % 4) continue;
      FactorSystem f = builtin(name, q);
      FactorCheckReport r = fs_check(f);
      INFO(name << " q=" << q << " " << r.str());
      CHECK(r.pass);
      CHECK(r.symmetric);
    }
}

TEST_CASE("A at the wrong parity fails condition 3") {
  FactorCheckReport r = fs_check(with_parity(builtin("A", 4), 0));
  CHECK_FALSE(r.pass);
  CHECK(r.condition == 3);
  CHECK(r.witness == std::vector<long>{1, 1, 1, 1});
  CHECK(r.str() == "fail: condition (3) at (1,1,1,1)");
}

TEST_CASE("coboundary examples") {
  FactorSystem one = coboundary([](long, long) { return CycNumber(1); }, 4);
  CHECK(one == builtin("trivial", 4));
  CHECK(coboundary(phi_c, 4) == builtin("C", 4));
  FactorSystem cd = fs_mul(builtin("C", 4), builtin("D", 4));
  CHECK(coboundary([](long x, long y) { return cyc_root(4, x * y); }, 4) == cd);
  CHECK_THROWS_AS(coboundary([](long, long) { return CycNumber(); }, 4), DomainError);
}

TEST_CASE("coboundaries of random functions are even symmetric S-factor systems") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 5);
  const CycNumber values[6] = {1, -1, cyc_root(4, 1), cyc_root(4, 3), cyc_root(8, 1), cyc_root(8, 5)};
  for (int t = 0; t < 100; ++t) {
    std::vector<CycNumber> table(16);
    for (auto& v : table) v = values[pick(rng)];
    FactorSystem f = coboundary([&](long r, long s) { return table[r * 4 + s]; }, 4);
    FactorCheckReport r = fs_check(f);
    REQUIRE(r.pass);
    REQUIRE(r.symmetric);
    REQUIRE(f.parity == 0);
  }
}

TEST_CASE("checker agrees on non-root values") {
  std::vector<CycNumber> table(16);
  for (int i = 0; i < 16; ++i) table[i] = CycNumber(mpq_class(i + 2, 3)) + cyc_root(8, i);
  FactorSystem f = coboundary([&](long r, long s) { return table[r * 4 + s]; }, 4);
  CHECK(fs_check(f).pass);
  f.omega1[f.index3(1, 2, 3)] *= CycNumber(2);
  FactorCheckReport r = fs_check(f);
  CHECK_FALSE(r.pass);
  CHECK(r.condition == 1);
}

TEST_CASE("group structure") {
  for (const char* name : {"A", "B", "C", "D"}) {
    FactorSystem f = builtin(name, 8);
    FactorSystem t = fs_mul(f, fs_inv(f));
    CHECK(t.equal_as_b(builtin("trivial", 8)));
    CHECK(t == builtin("trivial", 8));
  }
  CHECK(builtin("C", 4).equal_as_b(builtin("D", 4)));
  CHECK_FALSE(builtin("C", 4) == builtin("D", 4));
  CHECK(fs_mul(builtin("A", 4), builtin("B", 4)).parity == 0);
  CHECK(fs_check(fs_mul(builtin("A", 4), builtin("B", 4))).pass);
  CHECK(fs_check(fs_mul(builtin("C", 4), builtin("D", 4))).pass);
  CHECK_FALSE(fs_check(with_parity(fs_mul(builtin("A", 4), builtin("trivial", 4)), 0)).pass);
  CHECK_THROWS_AS(fs_mul(builtin("C", 4), builtin("C", 8)), DomainError);
}

TEST_CASE("relation suite") {
  RelationSuiteReport r4 = relation_suite(4);
  CHECK(r4.pass());
  CHECK(r4.records.size() == 2);
  RelationSuiteReport r8 = relation_suite(8);
  CHECK(r8.pass());
  CHECK(r8.records.size() == 3);
  RelationSuiteReport r16 = relation_suite(16);
  CHECK(r16.pass());
  CHECK(r16.records.size() == 4);
  CHECK(relation_suite(2).pass());
  CHECK_THROWS_AS(relation_suite(3), DomainError);
  // phi_a alone does not carry omega_sharp: A != B d(a) as S-factor systems at q = 16.
  FactorSystem b16 = fs_mul(builtin("B", 16), coboundary(phi_a, 16));
  CHECK(b16.equal_as_b(builtin("A", 16)));
  CHECK_FALSE(b16 == builtin("A", 16));
}
