#include <random>

#include "doctest.h"
#include "spinmon/qsym.hpp"

using namespace spinmon;

namespace {

// Brute-force q_k: coefficient of t^k in prod (1 + 2 sum_{j>=1} x_i^j t^j), read at x^e.
mpq_class q_brute(const std::vector<int>& e) {
  mpq_class c = 1;
  for (int x : e)
    if (x > 0) c *= 2;
  return c;
}

mpq_class det(std::vector<std::vector<mpq_class>> a) {
  int n = static_cast<int>(a.size());
  mpq_class d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      mpq_class f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

}  // namespace

TEST_CASE("strict partitions") {
  CHECK(strict_partitions(6).size() == 4);
  CHECK(strict_partitions(7).size() == 5);
  StrictPartition l({3, 2, 1});
  CHECK(l.size() == 6);
  CHECK(l.length() == 3);
  CHECK(l.epsilon() == 1);
  CHECK_THROWS_AS(StrictPartition({2, 2}), DomainError);
  CHECK(partitions(4, 2).size() == 3);
}

TEST_CASE("q_k against the generating product") {
  CHECK(q_poly(0, 3) == SymFun::constant(3, QSqrt2(1)));
  CHECK(q_poly(1, 3) == SymFun::monomial(3, {1}).scaled(QSqrt2(2)));
  SymFun q3 = q_poly(3, 4);
  for (auto e : std::vector<std::vector<int>>{{3, 0, 0, 0}, {0, 2, 1, 0}, {1, 1, 0, 1}})
    CHECK(q3.coefficient(e) == QSqrt2(q_brute(e)));
  // 3 variables: sum of 2^{#nonzero} over all monomials of degree 2 = 3*2 + 3*4.
  SymFun q2 = q_poly(2, 3);
  CHECK(q2.monomial_count() == 6);
}

TEST_CASE("q relation") {
  int n_vars = 10;
  std::vector<SymFun> q;
  for (int k = 0; k <= n_vars; ++k) q.push_back(q_poly(k, n_vars));
  for (int n = 1; n <= 10; ++n) {
    SymFun s(n_vars);
    for (int i = 0; i <= n; ++i) s = i % 2 ? s - q[i] * q[n - i] : s + q[i] * q[n - i];
    CHECK(s.is_zero());
  }
}

TEST_CASE("Q pairs") {
  CHECK(Q_pair(3, 0, 3) == q_poly(3, 3));
  CHECK(Q_pair(2, 1, 3) == q_poly(2, 3) * q_poly(1, 3) - q_poly(3, 3).scaled(QSqrt2(2)));
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 8; ++b) {
      if (a == b && a == 0) continue;
      CHECK(Q_pair(b, a, 8) == -Q_pair(a, b, 8));
    }
}

TEST_CASE("Pfaffian") {
  mpq_class a(3), b(-5, 2);
  std::vector<std::vector<mpq_class>> m2{{0, a}, {-a, 0}};
  CHECK(pfaffian(m2, mpq_class(0), mpq_class(1)) == a);
  std::vector<std::vector<mpq_class>> m4{{0, a, 0, 0}, {-a, 0, 0, 0}, {0, 0, 0, b}, {0, 0, -b, 0}};
  CHECK(pfaffian(m4, mpq_class(0), mpq_class(1)) == a * b);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial)
    for (int n : {4, 6}) {
      std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          m[i][j] = mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
          m[i][j].canonicalize();
          m[j][i] = -m[i][j];
        }
      mpq_class pf = pfaffian(m, mpq_class(0), mpq_class(1));
      CHECK(pf * pf == det(m));
    }
  std::vector<std::vector<mpq_class>> odd{{0}};
  CHECK_THROWS_AS(pfaffian(odd, mpq_class(0), mpq_class(1)), DomainError);
  std::vector<std::vector<mpq_class>> sym{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(pfaffian(sym, mpq_class(0), mpq_class(1)), DomainError);
}

TEST_CASE("Q_lambda") {
  CHECK(Q_lambda(StrictPartition({1}), 3) == q_poly(1, 3));
  CHECK(Q_lambda(StrictPartition({2, 1}), 3) == Q_pair(2, 1, 3));
  SymFun q321 = Q_lambda(StrictPartition({3, 2, 1}), 6);
  CHECK(q321.integral());
  CHECK(!q321.is_zero());
  // Leading monomial m_lambda with coefficient 2^{l(lambda)}.
  CHECK(q321.terms().rbegin()->first == Partition{3, 2, 1});
  CHECK(q321.coefficient({3, 2, 1}) == QSqrt2(8));
}

TEST_CASE("expansion in the Q basis") {
  int n = 8;
  for (int d = 1; d <= 5; ++d)
    for (const auto& l : strict_partitions(d)) {
      auto e = expand_in_Q_basis(Q_lambda(l, n));
      REQUIRE(e.size() == 1);
      CHECK(e.begin()->first == l);
      CHECK(e.begin()->second == QSqrt2(1));
    }
  auto e = expand_in_Q_basis(q_poly(1, 3) * q_poly(2, 3));
  for (const auto& [l, c] : e) CHECK(c.is_integer());
  CHECK(e.size() == 2);
  CHECK_THROWS_AS(expand_in_Q_basis(SymFun::monomial(3, {1, 1})), DomainError);
}

TEST_CASE("structure constants are integers") {
  int n = 8;
  std::vector<StrictPartition> all;
  for (int d = 1; d <= 7; ++d)
    for (const auto& l : strict_partitions(d)) all.push_back(l);
  int products = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.size() + b.size() > 8 || b < a) continue;
      auto e = expand_in_Q_basis(Q_lambda(a, n) * Q_lambda(b, n));
      for (const auto& [l, c] : e) CHECK(c.is_integer());
      ++products;
    }
  CHECK(products > 30);
}

TEST_CASE("class dictionary") {
  StrictPartition one({1}), two_one({2, 1});
  CHECK(class_dictionary(one, SimpleFlavor::L) == QSqrt2(1));
  CHECK(class_dictionary(one, SimpleFlavor::N) == QSqrt2(0, mpq_class(1, 2)));
  CHECK(class_dictionary(two_one, SimpleFlavor::L) == QSqrt2(mpq_class(1, 2)));
  CHECK(class_dictionary(two_one, SimpleFlavor::N) == QSqrt2(0, mpq_class(1, 2)));
  for (int d = 1; d <= 7; ++d)
    for (const auto& l : strict_partitions(d)) {
      QSqrt2 r = class_dictionary(l, SimpleFlavor::L) / class_dictionary(l, SimpleFlavor::N);
      QSqrt2 expected = d % 2 == 0 ? QSqrt2(1) : l.length() % 2 == 0 ? QSqrt2(0, mpq_class(1, 2)) : QSqrt2::sqrt2();
      CHECK(r == expected);
    }
  CHECK(is_queer_type(two_one));
  CHECK(!is_queer_type(one));
}
