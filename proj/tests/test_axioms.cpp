#include <random>

#include "doctest.h"
#include "spinmon/axioms.hpp"

using namespace spinmon;

namespace {

std::vector<SVecObject> small_svec_objects(long odd_degree) {
  return {SVecObject{{1, 0}, 0, 0, "E"}, SVecObject{{0, 1}, 0, 0, "O"}, SVecObject{{1, 1}, 0, odd_degree, "M"}};
}

SVecInstance svec_with_generators(int q, long odd_degree) {
  SVecInstance c(q, small_svec_objects(odd_degree), 3);
  auto objs = c.objects();
  const SVecObject& m = objs[2];
  Matrix swap(2, 2);
  swap.at(0, 1) = CycNumber(1);
  swap.at(1, 0) = CycNumber(1);
  c.add_generator(m, m, SuperMap(m.space(), m.space(), 1, swap), "nu");
  Matrix diag = Matrix::identity(2);
  diag.at(1, 1) = CycNumber(3);
  c.add_generator(m, m, SuperMap(m.space(), m.space(), 0, diag), "d");
  Matrix up(2, 1);
  up.at(1, 0) = CycNumber(1);
  c.add_generator(objs[0], m, SuperMap(objs[0].space(), m.space(), 1, up), "e_to_odd");
  return c;
}

// SVec with one associator sign flipped.
struct CorruptSVec : SVecInstance {
  using SVecInstance::SVecInstance;
  std::string target;
  SuperMap associator(const SVecObject& a, const SVecObject& b, const SVecObject& c) const {
    SuperMap m = SVecInstance::associator(a, b, c);
    return label(a) + label(b) + label(c) == target ? -m : m;
  }
  SuperMap associator_inverse(const SVecObject& a, const SVecObject& b, const SVecObject& c) const {
    return *associator(a, b, c).inverse();
  }
};

}  // namespace

TEST_CASE("factor scalars agree with tables and closed forms") {
  FactorScalars t = FactorScalars::builtin(BuiltinFactor::A, 8);
  FactorScalars z = FactorScalars::closed_form(BuiltinFactor::A);
  for (long a = 0; a < 8; ++a)
    for (long b = 0; b < 8; ++b) {
      REQUIRE(t.ws(a, b) == z.ws(a, b));
      for (long c = 0; c < 8; ++c) REQUIRE(t.w2(a, b, c) == z.w2(a, b, c));
    }
  FactorScalars prod = FactorScalars::closed_form(BuiltinFactor::B) * FactorScalars::closed_form(BuiltinFactor::D);
  CHECK(prod.ws(1, 1) == cyc_root(8, 5));
  CHECK(prod.inverse().w2(1, 1, 1) == cyc_root(4, 3) * CycNumber(-1));
  CHECK(prod.parity == 1);
  CHECK_THROWS_AS(FactorScalars::closed_form(BuiltinFactor::C) * FactorScalars::builtin(BuiltinFactor::C, 4), DomainError);
}

TEST_CASE("S~ is strict and satisfies the type II suite with factor A") {
  for (int q : {4, 8}) {
    StildeInstance c(q, 5);
    AxiomReport r = check_all(c, c.braiding());
    INFO("q=" << q);
    if (!r.pass()) {
      const AxiomRecord* f = r.first_failure();
      INFO(f->check << " " << f->tuple[0] << " expected " << f->expected << " got " << f->got);
      CHECK(r.pass());
    }
    CHECK(r.count("pentagon") > 0);
    CHECK(r.count("hexagon H1") == r.count("hexagon H2"));
    CHECK(r.count("symmetry") > 0);
  }
}

TEST_CASE("S~ hexagon H1 is the tau j identity") {
  StildeInstance c(8, 6);
  Braiding<StildeInstance> b = c.braiding();
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int p = 0; p <= 2; ++p) {
        TgaElement lhs = c.compose(c.tensor(c.identity(m), b.map(n, p)), c.tensor(b.map(n, m), c.identity(p)));
        CHECK(lhs == b.map(n, m + p));
      }
}

TEST_CASE("S~ symmetry scalars") {
  StildeInstance c(8, 6);
  Braiding<StildeInstance> b = c.braiding();
  CHECK(c.compose(b.map(2, 2), b.map(2, 2)) == c.identity(4).scaled(CycNumber(-1)));
  CHECK(c.compose(b.map(3, 2), b.map(2, 3)) == c.identity(5).scaled(CycNumber(-1)));
  CHECK(c.compose(b.map(1, 1), b.map(1, 1)) == c.identity(2));
  CHECK(c.compose(b.map(4, 1), b.map(1, 4)) == c.identity(5));
}

TEST_CASE("rescaled braiding is type II with factor B at q = 2") {
  StildeInstance c(2, 5);
  AxiomReport r = check_all(c, c.rescaled_braiding());
  CHECK(r.pass());
  // Without the rescaling, factor B does not fit.
  Braiding<StildeInstance> plain = c.rescaled_braiding();
  plain.map = [](int n, int m) { return TgaElement::from_group(tau_tilde(n, m)); };
  CHECK_FALSE(check_all(c, plain).pass());
}

TEST_CASE("S~ braiding sign flips are detected") {
  StildeInstance c(4, 4);
  Braiding<StildeInstance> b = c.braiding();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int t = 0; t < 20; ++t) {
    int n = pick(rng), m = pick(rng);
    while (n + m > 4) m = pick(rng);
    Braiding<StildeInstance> bad = flip_braiding_sign(c, b, c.label(n), c.label(m));
    INFO(n << "," << m);
    CHECK_FALSE(check_all(c, bad).pass());
  }
}

TEST_CASE("naturality catches a missing sign") {
  StildeInstance c(4, 4);
  Braiding<StildeInstance> b = c.braiding();
  Braiding<StildeInstance> ord = b;
  ord.kind = BraidingKind::Ordinary;
  AxiomReport r = check_naturality(c, ord);
  CHECK_FALSE(r.pass());
  CHECK(check_naturality(c, b).pass());
}

TEST_CASE("S~ has no Pi-structure") {
  StildeInstance c(4, 3);
  CHECK_THROWS_AS(convert_II_to_I(c, c.braiding()), DomainError);
  Braiding<StildeInstance> b = c.braiding();
  b.kind = BraidingKind::TypeI;
  CHECK_THROWS_AS(check_hexagons(c, b), DomainError);
}

TEST_CASE("braid action on S~") {
  StildeInstance c(4, 6);
  Braiding<StildeInstance> b = c.braiding();
  auto one = braid_action(c, b, 1, 3);
  CHECK(one.report.pass());
  CHECK(one.sigma.size() == 2);
  // X = [1]: sigma_i are the generators of S~_3.
  CHECK(one.sigma[0] == TgaElement::from_group(spin_generator(3, 1)));
  CHECK(one.sigma[1] == TgaElement::from_group(spin_generator(3, 2)));
  auto two = braid_action(c, b, 2, 3);
  CHECK(two.report.pass());
  CHECK(c.compose(two.sigma[0], two.sigma[0]) == c.identity(6).scaled(CycNumber(-1)));
  CHECK(two.report.count("braid naturality") > 0);
  auto four = braid_action(c, b, 1, 5);
  CHECK(four.report.pass());
  CHECK(four.report.count("braid commutation") == 3);
  CHECK_THROWS_AS(braid_action(StildeInstance(2, 4), c.rescaled_braiding(), 1, 3), DomainError);
}

TEST_CASE("SVec with tau passes as an ordinary symmetric category") {
  SVecInstance c = svec_with_generators(4, 0);
  AxiomReport r = check_all(c, c.symmetry());
  CHECK(r.pass());
  CHECK(r.count("naturality") == 9);
}

TEST_CASE("a corrupted associator fails the pentagon") {
  CorruptSVec c(4, small_svec_objects(0), 4);
  c.target = "OMO";
  AxiomReport r = check_pentagon(c);
  CHECK_FALSE(r.pass());
  const AxiomRecord* f = r.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->tuple.size() == 4);
  CHECK(f->got == "-1");
}

TEST_CASE("tensor associator is the identity on spaces concentrated in even degree") {
  SuperMap a = tensor_associator({2, 0}, {1, 0}, {3, 0});
  CHECK(a == SuperMap::identity({6, 0}));
  SuperMap b = tensor_associator({1, 1}, {1, 1}, {1, 1});
  CHECK(b != SuperMap::identity({4, 4}));
  CHECK(b * *b.inverse() == SuperMap::identity({4, 4}));
}

TEST_CASE("conversion of degree zero braidings is the identity") {
  SVecInstance c = svec_with_generators(4, 0);
  Braiding<SVecInstance> b = c.symmetry();
  b.kind = BraidingKind::TypeII;
  Braiding<SVecInstance> one = convert_II_to_I(c, b);
  CHECK(compare_braidings(c, one, b).pass());
  AxiomReport r = check_hexagons(c, one);
  r.append(check_symmetry(c, one));
  r.append(check_naturality(c, one));
  CHECK(r.pass());
  Braiding<SVecInstance> back = convert_I_to_II(c, one);
  CHECK(compare_braidings(c, back, b).pass());
  CHECK_THROWS_AS(convert_I_to_II(c, b), DomainError);
}
