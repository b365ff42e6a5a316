#include <random>

#include "doctest.h"
#include "spinmon/supervec.hpp"

using namespace spinmon;

namespace {

SuperMap random_map(std::mt19937_64& rng, SuperSpace s, SuperSpace t, int p) {
  std::uniform_int_distribution<int> v(-3, 3);
  Matrix m(t.dim(), s.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      if (t.parity(i) == (s.parity(j) + p) % 2) m.at(i, j) = v(rng);
  return {s, t, p, m};
}

SuperSpace random_space(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 3);
  for (;;) {
    SuperSpace s{d(rng), d(rng)};
    if (s.dim() >= 1 && s.dim() <= 3) return s;
  }
}

SuperMap swap11() {
  Matrix m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  return {{1, 1}, {1, 1}, 1, m};
}

}  // namespace

TEST_CASE("tensor_space examples") {
  CHECK(tensor_space({1, 0}, {1, 0}).space == SuperSpace{1, 0});
  CHECK(tensor_space({1, 1}, {1, 1}).space == SuperSpace{2, 2});
  TensorSpace t = tensor_space({2, 1}, {1, 2});
  CHECK(t.space == SuperSpace{4, 5});
  // Enumerating the pairs directly gives the same parity counts.
  int even = 0;
  for (auto [i, j] : t.pairs) even += (t.left.parity(i) + t.right.parity(j)) % 2 == 0;
  CHECK(even == 4);
  for (int k = 0; k < t.space.dim(); ++k) {
    auto [i, j] = t.pairs[k];
    CHECK(t.index(i, j) == k);
    CHECK(t.space.parity(k) == (t.left.parity(i) + t.right.parity(j)) % 2);
  }
}

TEST_CASE("tensor_map examples") {
  SuperSpace v{1, 1};
  CHECK(tensor_map(SuperMap::identity(v), SuperMap::identity({2, 1})) ==
        SuperMap::identity(tensor_space(v, {2, 1}).space));
  SuperMap g = swap11();
  SuperMap f = SuperMap::identity(v);
  SuperMap fg = tensor_map(f, g);
  TensorSpace t = tensor_space(v, v);
  // Odd basis vector in the left factor picks up a sign against odd g.
  CHECK(fg.m.at(t.index(1, 1), t.index(1, 0)) == CycNumber(-1));
  CHECK(fg.m.at(t.index(0, 1), t.index(0, 0)) == CycNumber(1));
  SuperMap xx = tensor_map(g, g);
  CHECK(xx * xx == -tensor_map(g * g, g * g));
}

TEST_CASE("symmetry examples") {
  CHECK(symmetry(SymKind::Tau, {1, 0}, {1, 0}).m == Matrix::identity(1));
  SuperSpace o{0, 1};
  CHECK(symmetry(SymKind::Tau, o, o).m.at(0, 0) == CycNumber(-1));
  CHECK(symmetry(SymKind::Sigma, o, o).m.at(0, 0) == CycNumber(1));
  SuperSpace v{1, 1};
  CHECK(symmetry(SymKind::Tau, v, v) * symmetry(SymKind::Tau, v, v) == SuperMap::identity({2, 2}));
}

TEST_CASE("xi_power examples") {
  SuperSpace v{2, 1};
  CHECK(xi_power(3, 3, v) == SuperMap::identity(pi(v)));
  CHECK(xi_power(0, 2, v).parity == 0);
  CHECK(xi_power(0, 1, v).parity == 1);
  CHECK(pi_map(xi_power(0, 1, v)) == -xi_power(1, 2, v));
  CHECK(xi_power(1, 2, v) * xi_power(0, 1, v) == xi_power(0, 2, v));
}

TEST_CASE("pi_right examples") {
  SuperSpace v{1, 1};
  PiRight p = pi_right(v);
  CHECK(p.space == SuperSpace{1, 1});
  CHECK(p.xi.m.at(1, 0) == CycNumber(1));
  CHECK(p.xi.m.at(0, 1) == CycNumber(-1));
  CHECK(p.xi * *p.xi.inverse() == SuperMap::identity(p.space));
}

TEST_CASE("eigenspace examples") {
  SuperSpace v{2, 1};
  CHECK(eigenspace(SuperMap::identity(v), 1).space == v);
  CHECK(eigenspace(SuperMap::identity(v), 2).space == SuperSpace{0, 0});
  SuperMap mn = tensor_map(swap11(), swap11());
  CHECK(mn * mn == SuperMap::identity({2, 2}).scaled(-1));
  Eigenspace e = eigenspace(mn, cyc_root(4, 1));
  CHECK(e.space == SuperSpace{1, 1});
  CHECK(mn * e.inclusion == e.inclusion.scaled(cyc_root(4, 1)));
}

TEST_CASE("interchange law with product sign") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    SuperSpace a = random_space(rng), b = random_space(rng), c = random_space(rng);
    SuperSpace d = random_space(rng), e = random_space(rng), f = random_space(rng);
    std::uniform_int_distribution<int> bit(0, 1);
    SuperMap f1 = random_map(rng, a, b, bit(rng)), f2 = random_map(rng, b, c, bit(rng));
    SuperMap g1 = random_map(rng, d, e, bit(rng)), g2 = random_map(rng, e, f, bit(rng));
    SuperMap lhs = tensor_map(f2, g2) * tensor_map(f1, g1);
    SuperMap rhs = tensor_map(f2 * f1, g2 * g1);
    if ((f1.parity * g2.parity) % 2) rhs = -rhs;
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("tau is natural with sign") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int t = 0; t < 200; ++t) {
    SuperSpace a = random_space(rng), b = random_space(rng), c = random_space(rng), d = random_space(rng);
    SuperMap f = random_map(rng, a, b, bit(rng)), g = random_map(rng, c, d, bit(rng));
    SuperMap lhs = symmetry(SymKind::Tau, b, d) * tensor_map(f, g);
    SuperMap rhs = tensor_map(g, f) * symmetry(SymKind::Tau, a, c);
    if ((f.parity * g.parity) % 2) rhs = -rhs;
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("eigenspaces of an even map squaring to -1 split evenly") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<int> d(1, 3);
    SuperSpace u{d(rng), 0};
    u.odd = u.even;
    SuperSpace w{d(rng), 0};
    w.odd = w.even;
    // An odd involution on each factor; the tensor squares to -1.
    auto odd_involution = [&](SuperSpace s) {
      SuperMap a = random_map(rng, {s.even, 0}, {s.even, 0}, 0);
      while (!a.m.inverse()) a = random_map(rng, {s.even, 0}, {s.even, 0}, 0);
      Matrix ai = *a.m.inverse();
      Matrix m(s.dim(), s.dim());
      for (int i = 0; i < s.even; ++i)
        for (int j = 0; j < s.even; ++j) {
          m.at(s.even + i, j) = a.m.at(i, j);
          m.at(i, s.even + j) = ai.at(i, j);
        }
      return SuperMap(s, s, 1, m);
    };
    SuperMap mu = odd_involution(u), nu = odd_involution(w);
    REQUIRE(mu * mu == SuperMap::identity(u));
    SuperMap x = tensor_map(mu, nu);
    Eigenspace p = eigenspace(x, cyc_root(4, 1)), m = eigenspace(x, cyc_root(4, 3));
    CHECK(p.space.dim() == m.space.dim());
    CHECK(p.space.dim() * 2 == x.src.dim());
  }
}

TEST_CASE("direct sum and graded basis") {
  DirectSum d = direct_sum({1, 2}, {2, 1});
  CHECK(d.space == SuperSpace{3, 3});
  GradedBasis g = graded_basis({1, 0, 1, 0});
  CHECK(g.space == SuperSpace{2, 2});
  CHECK(g.pos == std::vector<int>{2, 0, 3, 1});
  CHECK_THROWS_AS(SuperMap({1, 1}, {1, 1}, 0, swap11().m), DomainError);
}
