#include <random>
#include <set>

#include "doctest.h"
#include "spinmon/spin_group.hpp"

using namespace spinmon;

namespace {

SpinGroupElement s(int n, int i, SpinFlavor f = kSpinStandard) { return spin_generator(n, i, f); }

SpinGroupElement with_c(SpinGroupElement g, int k) {
  g.sign = (g.sign + k) % 2;
  return g;
}

int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace

TEST_CASE("permutation utilities") {
  CHECK(perm_index(perm_identity(4)) == 0);
  for (int n = 0; n <= 5; ++n)
    for (std::uint32_t i = 0; i < factorial(n); ++i) REQUIRE(perm_index(perm_from_index(n, i)) == i);
  CHECK(perm_tau(2, 1) == Perm{1, 2, 0});
  CHECK(cycle_notation(perm_identity(3)) == "()");
  CHECK(cycle_notation(perm_tau(2, 1)) == "(1 2 3)");
  CHECK(canonical_word(perm_adjacent(4, 3)) == std::vector<int>{3});
  for (const Perm& p : all_perms(5)) {
    std::vector<int> w = canonical_word(p);
    REQUIRE(static_cast<int>(w.size()) == perm_length(p));
    Perm q = perm_identity(5);
    for (int i : w) q = perm_mul(q, perm_adjacent(5, i));
    REQUIRE(q == p);
  }
}

TEST_CASE("canonical lift examples") {
  CHECK(canonical_lift(perm_identity(3)) == spin_identity(3));
  CHECK(canonical_lift(perm_adjacent(3, 1)) == s(3, 1));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      SpinGroupElement t = tau_tilde(n, m);
      CHECK(t.perm == perm_tau(n, m));
      SpinGroupElement ratio = group_mul(t, group_inv(canonical_lift(perm_tau(n, m))));
      CHECK(ratio.perm == perm_identity(n + m));
    }
}

TEST_CASE("group_mul examples") {
  for (int k = 0; k < 4; ++k) {
    SpinFlavor f = flavor_by_index(k);
    CHECK(group_mul(s(4, 1, f), s(4, 1, f)) == with_c(spin_identity(4, f), f.epsilon));
    CHECK(group_mul(s(4, 1, f), s(4, 3, f)) == with_c(group_mul(s(4, 3, f), s(4, 1, f)), f.delta));
  }
  CHECK(group_mul(tau_tilde(2, 1), tau_tilde(1, 2)) == spin_identity(3));
  CHECK_THROWS_AS(group_mul(s(3, 1), s(4, 1)), DomainError);
  CHECK_THROWS_AS(group_mul(s(3, 1), s(3, 1, flavor_by_index(0))), DomainError);
}

TEST_CASE("presentation relations and associativity for every flavor") {
  for (int k = 0; k < 4; ++k) {
    SpinFlavor f = flavor_by_index(k);
    for (int n = 2; n <= 5; ++n) {
      SpinGroupElement c = spin_c(n, f);
      REQUIRE(group_mul(c, c) == spin_identity(n, f));
      for (int i = 1; i < n; ++i) {
        REQUIRE(group_mul(s(n, i, f), s(n, i, f)) == with_c(spin_identity(n, f), f.epsilon));
        REQUIRE(group_mul(c, s(n, i, f)) == group_mul(s(n, i, f), c));
        for (int j = i + 1; j < n; ++j) {
          SpinGroupElement a = s(n, i, f), b = s(n, j, f);
          if (j == i + 1) REQUIRE(group_product({a, b, a}) == group_product({b, a, b}));
          else REQUIRE(group_mul(a, b) == with_c(group_mul(b, a), f.delta));
        }
      }
    }
    std::mt19937 rng(17 + k);
    const int n = 5;
    std::uniform_int_distribution<std::uint32_t> pick(0, factorial(n) - 1);
    std::uniform_int_distribution<int> bit(0, 1);
    auto random_elem = [&] { return SpinGroupElement{n, f, perm_from_index(n, pick(rng)), bit(rng)}; };
    for (int t = 0; t < 200; ++t) {
      SpinGroupElement a = random_elem(), b = random_elem(), d = random_elem();
      REQUIRE(group_mul(group_mul(a, b), d) == group_mul(a, group_mul(b, d)));
      REQUIRE(group_mul(a, group_inv(a)) == spin_identity(n, f));
      REQUIRE(group_mul(group_inv(a), a) == spin_identity(n, f));
    }
  }
}

TEST_CASE("canonical lift equals the product of its word") {
  for (int n = 1; n <= 5; ++n)
    for (const Perm& p : all_perms(n)) {
      SpinGroupElement g = spin_identity(n);
      for (int i : canonical_word(p)) g = group_mul(g, s(n, i));
      REQUIRE(g == canonical_lift(p));
    }
}

TEST_CASE("tau_tilde examples") {
  CHECK(tau_tilde(1, 1) == s(2, 1));
  CHECK(group_mul(tau_tilde(2, 2), tau_tilde(2, 2)) == spin_c(4));
  CHECK(tau_tilde(1, 2) == group_mul(s(3, 2), s(3, 1)));
  CHECK(tau_tilde(0, 3) == spin_identity(3));
}

TEST_CASE("tau symmetry up to total rank 8") {
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; n + m <= 8; ++m) {
      SpinGroupElement prod = group_mul(tau_tilde(n, m), tau_tilde(m, n));
      REQUIRE(prod == with_c(spin_identity(n + m), (binom2(n) * binom2(m)) % 2));
    }
}

TEST_CASE("j_embed examples") {
  CHECK(j_embed(2, 1, s(2, 1), spin_identity(1)) == s(3, 1));
  CHECK(j_embed(2, 2, spin_identity(2), s(2, 1)) == s(4, 3));
  SpinGroupElement t = tau_tilde(2, 1);
  SpinGroupElement conj = group_product({t, j_embed(2, 1, s(2, 1), spin_identity(1)), group_inv(t)});
  CHECK(conj == j_embed(1, 2, spin_identity(1), s(2, 1)));
  CHECK(conj == s(3, 2));
  CHECK_THROWS_AS(j_embed(2, 1, s(3, 1), spin_identity(1)), DomainError);
}

TEST_CASE("j_embed is a homomorphism from the signed product") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; n + m <= 5; ++m)
      for (const Perm& g1 : all_perms(n))
        for (const Perm& h1 : all_perms(m))
          for (const Perm& g2 : all_perms(n))
            for (const Perm& h2 : all_perms(m)) {
              SpinGroupElement a = canonical_lift(g1), b = canonical_lift(h1);
              SpinGroupElement a2 = canonical_lift(g2), b2 = canonical_lift(h2);
              SpinGroupElement lhs = group_mul(j_embed(n, m, a, b), j_embed(n, m, a2, b2));
              int k = b.parity() * a2.parity();
              REQUIRE(lhs == with_c(j_embed(n, m, group_mul(a, a2), group_mul(b, b2)), k));
            }
}

TEST_CASE("conjugation by tau up to total rank 6") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; n + m <= 6; ++m) {
      SpinGroupElement t = tau_tilde(n, m), ti = group_inv(t);
      std::vector<SpinGroupElement> gs{spin_identity(n)}, hs{spin_identity(m)};
      for (int i = 1; i < n; ++i) gs.push_back(s(n, i));
      for (int i = 1; i < m; ++i) hs.push_back(s(m, i));
      for (const auto& g : gs)
        for (const auto& h : hs) {
          SpinGroupElement lhs = group_product({t, j_embed(n, m, g, h), ti});
          int k = n * m * g.parity() + n * m * h.parity() + g.parity() * h.parity();
          REQUIRE(lhs == with_c(j_embed(m, n, h, g), k % 2));
        }
    }
}

TEST_CASE("tau composition identity up to total rank 7") {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; n + m <= 7; ++m)
      for (int p = 0; n + m + p <= 7; ++p) {
        SpinGroupElement a = j_embed(n, m + p, spin_identity(n), tau_tilde(m, p));
        SpinGroupElement b = j_embed(n + m, p, tau_tilde(m, n), spin_identity(p));
        REQUIRE(group_mul(a, b) == tau_tilde(m, n + p));
      }
}

TEST_CASE("Clifford image of the spin group is injective") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    for (const Perm& p : all_perms(n))
      for (int sign = 0; sign < 2; ++sign) {
        CliffordElement img = spin_clifford_image(SpinGroupElement{n, kSpinStandard, p, sign});
        REQUIRE(seen.insert(img.str()).second);
      }
    CHECK(seen.size() == 2 * factorial(n));
  }
  CHECK_THROWS_AS(spin_clifford_image(s(3, 1, flavor_by_index(0))), DomainError);
}

TEST_CASE("tga_mul examples") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint32_t> pick(0, factorial(5) - 1);
  for (int t = 0; t < 50; ++t) {
    SpinGroupElement g = canonical_lift(perm_from_index(5, pick(rng)));
    TgaElement x = TgaElement::from_group(g);
    REQUIRE(tga_mul(x, TgaElement::from_group(group_inv(g))) == TgaElement::scalar(5, 1));
  }
  TgaElement a = TgaElement::from_group(s(4, 1)), b = TgaElement::from_group(s(4, 3));
  CHECK(tga_mul(a, b) == -tga_mul(b, a));
  TgaElement one = TgaElement::scalar(2, 1), s1 = TgaElement::from_group(s(2, 1));
  CHECK(tga_mul(one + s1, one - s1).is_zero());
  CHECK(TgaElement::from_group(spin_c(3)) == TgaElement::scalar(3, -1));
  CHECK_THROWS_AS(tga_mul(a, one), DomainError);
}

TEST_CASE("tga_tensor matches j_embed") {
  TgaElement x = TgaElement::from_group(s(2, 1)) + TgaElement::scalar(2, 3);
  TgaElement y = TgaElement::from_group(s(2, 1));
  TgaElement t = tga_tensor(2, 2, x, y);
  TgaElement expected =
      TgaElement::from_group(j_embed(2, 2, s(2, 1), s(2, 1))) + TgaElement::from_group(s(4, 3)).scaled(3);
  CHECK(t == expected);
}

TEST_CASE("Hecke-Clifford examples") {
  CliffordElement a1 = CliffordElement::generator(2, 1);
  CHECK(hecke_iso(TgaElement::scalar(2, 1), a1) == HeckeCliffordElement::clifford(a1));
  HeckeCliffordElement p = hecke_phi(s(2, 1));
  CHECK(p * p == HeckeCliffordElement::perm(perm_identity(2)));
  HeckeCliffordElement q = hecke_phi(s(4, 1));
  HeckeCliffordElement a3 = HeckeCliffordElement::clifford(CliffordElement::generator(4, 3));
  CHECK(q * a3 == -(a3 * q));
  // w alpha_i w^{-1} = alpha_{w(i)}.
  Perm w = perm_tau(2, 1);
  HeckeCliffordElement lhs = HeckeCliffordElement::perm(w) * HeckeCliffordElement::clifford(CliffordElement::generator(3, 1)) *
                             HeckeCliffordElement::perm(perm_inv(w));
  CHECK(lhs == HeckeCliffordElement::clifford(CliffordElement::generator(3, w[0] + 1)));
}

TEST_CASE("Hecke-Clifford isomorphism up to rank 4") {
  for (int n = 1; n <= 4; ++n) {
    HeckeIsoReport r = hecke_iso_check(n);
    CHECK(r.relations);
    CHECK(r.rank == r.expected_rank);
    CHECK(r.pass());
  }
}

TEST_CASE("tau factorization in the Hecke-Clifford algebra") {
  CHECK(tau_factorization(1, 1).holds);
  CHECK(tau_factorization(0, 3).holds);
  CHECK(tau_factorization(2, 1).holds);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n) REQUIRE(tau_factorization(m, n).holds);
}

TEST_CASE("rendering") {
  CHECK(s(3, 1).str() == "+(1 2)");
  CHECK(spin_c(2).str() == "-()");
}
