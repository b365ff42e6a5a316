#include "doctest.h"
#include "spinmon/clifford.hpp"

using namespace spinmon;

namespace {

CliffordElement a(int n, int i) { return CliffordElement::generator(n, i); }
CliffordElement one(int n) { return CliffordElement::scalar(n, 1); }

}  // namespace

TEST_CASE("cl_mul examples") {
  CHECK(cl_mul(a(2, 1), a(2, 1)) == CliffordElement::scalar(2, 2));
  CHECK(cl_mul(a(2, 2), a(2, 1)) == -CliffordElement::monomial(2, 0b11));
  CliffordElement s = a(2, 1) + a(2, 2);
  CHECK(cl_mul(s, s) == CliffordElement::scalar(2, 4));
  CHECK_THROWS_AS(cl_mul(a(2, 1), a(3, 1)), DomainError);
}

TEST_CASE("cl_from_word examples") {
  CHECK(cl_from_word(3, std::vector<int>{}) == one(3));
  // Stepwise: a1 a2 = a{1,2}; a{1,2} a1 = -a1 a1 a2 = -2 a2.
  CliffordElement step = cl_mul(cl_mul(a(3, 1), a(3, 2)), a(3, 1));
  CHECK(cl_from_word(3, std::vector<int>{1, 2, 1}) == step);
  CHECK(step == a(3, 2).scaled(-2));
  CHECK(cl_from_word(3, std::vector<int>{1, 1, 1}) == a(3, 1).scaled(2));
  CHECK_THROWS_AS(cl_from_word(3, std::vector<int>{4}), DomainError);
}

TEST_CASE("spin_image examples") {
  CHECK(spin_image(2, 1) * spin_image(2, 1) == one(2));
  CHECK(spin_image(4, 1) * spin_image(4, 3) == -(spin_image(4, 3) * spin_image(4, 1)));
  CliffordElement l = spin_image(3, 1) * spin_image(3, 2) * spin_image(3, 1);
  CliffordElement r = spin_image(3, 2) * spin_image(3, 1) * spin_image(3, 2);
  CHECK(l == r);
  CHECK(l == (a(3, 1) - a(3, 3)).scaled(mpq_class(1, 2)));
  CHECK_THROWS_AS(spin_image(3, 3), DomainError);
}

TEST_CASE("spin_image satisfies the spin relations with c = -1") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) {
      CliffordElement si = spin_image(n, i);
      REQUIRE(si * si == one(n));
      for (int j = 1; j < n; ++j) {
        CliffordElement sj = spin_image(n, j);
        if (j == i + 1) REQUIRE(si * sj * si == sj * si * sj);
        if (j > i + 1) REQUIRE(si * sj == -(sj * si));
      }
    }
}

TEST_CASE("conjugation of generators by spin images") {
  for (int n = 2; n <= 6; ++n)
    for (int j = 1; j < n; ++j)
      for (int i = 1; i <= n; ++i) {
        int si = i == j ? j + 1 : (i == j + 1 ? j : i);
        REQUIRE(spin_image(n, j) * a(n, i) == -(a(n, si) * spin_image(n, j)));
      }
}

TEST_CASE("monomial products are scaled monomials") {
  for (int n = 1; n <= 5; ++n) {
    int dim = 0;
    for (CliffordMask s = 0; s < (1u << n); ++s) {
      ++dim;
      for (CliffordMask t = 0; t < (1u << n); ++t) {
        CliffordElement p = CliffordElement::monomial(n, s) * CliffordElement::monomial(n, t);
        REQUIRE(p.terms().size() == 1);
        REQUIRE(p.terms().begin()->first == (s ^ t));
      }
    }
    CHECK(dim == (1 << n));
  }
}

TEST_CASE("Cl_2 matrix isomorphism") {
  auto [x, y] = cl2_matrix_iso();
  SuperMap id = SuperMap::identity({1, 1});
  CHECK(x.m.at(1, 0) == CycNumber(1));
  CHECK(x.m.at(0, 1) == CycNumber(2));
  CHECK(x * x == id.scaled(2));
  CHECK(y.m.at(0, 1) == cyc_root(4, 1) * CycNumber(-2));
  CHECK(y * y == id.scaled(2));
  CHECK((x * y + y * x).is_zero());
  CHECK(monomial_image_rank({x, y}) == 4);
}

TEST_CASE("Cl_8 matrix isomorphism") {
  auto gens = cl8_matrix_iso();
  REQUIRE(gens.size() == 8);
  CHECK(gens[0].src == SuperSpace{8, 8});
  for (const auto& g : gens) {
    CHECK(g.parity == 1);
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) CHECK(g.m.at(i, j).is_rational());
  }
  CHECK(satisfies_clifford_relations(gens));
  CHECK(monomial_image_rank(gens) == 256);
}

TEST_CASE("small Clifford isomorphisms") {
  SmallIsoReport c1 = small_iso_verify(SmallIso::Cl1TensorCl1op);
  CHECK(c1.pass());
  SmallIsoReport c2 = small_iso_verify(SmallIso::Cl3Quaternion);
  CHECK(c2.pass());
  CliffordElement i = cl_from_word(3, std::vector<int>{1, 2}).scaled(mpq_class(1, 2));
  CHECK(i * i == -one(3));
  SmallIsoReport c3 = small_iso_verify(SmallIso::Cl4QuaternionMatrix);
  CHECK(c3.homomorphism);
  CHECK(c3.rank == 16);
}

TEST_CASE("quaternion multiplication") {
  auto q = [](int b) { return QuaternionElement::basis(b); };
  CHECK(q(1) * q(2) == q(3));
  CHECK(q(2) * q(1) == QuaternionElement{{CycNumber(), CycNumber(), CycNumber(), CycNumber(-1)}});
  CHECK(quaternion_left(q(1)) * quaternion_right(q(2)) == quaternion_right(q(2)) * quaternion_left(q(1)));
}

TEST_CASE("periodicity data") {
  PeriodicityData d2 = periodicity_data(2);
  CHECK(d2.module_u == SuperSpace{1, 1});
  const CliffordElement& e = d2.idempotent_eps;
  CHECK(e * e == e);
  CHECK(e.parity() == 0);
  // eps Cl_2 as a super space.
  std::vector<CliffordElement> even, odd;
  for (CliffordMask s = 0; s < 4; ++s) (std::popcount(s) % 2 ? odd : even).push_back(e * CliffordElement::monomial(2, s));
  auto rank_of = [](const std::vector<CliffordElement>& xs) {
    Matrix m(4, static_cast<int>(xs.size()));
    for (size_t j = 0; j < xs.size(); ++j)
      for (const auto& [s, c] : xs[j].terms()) m.at(static_cast<int>(s), static_cast<int>(j)) = c;
    return m.rank();
  };
  CHECK(rank_of(even) == 1);
  CHECK(rank_of(odd) == 1);
  PeriodicityData d8 = periodicity_data(8);
  CHECK(d8.module_u == SuperSpace{8, 8});
  CHECK(d8.idempotent_eps * d8.idempotent_eps == d8.idempotent_eps);
  CHECK_THROWS_AS(periodicity_data(4), DomainError);
}
