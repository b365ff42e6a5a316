#include <random>

#include "doctest.h"
#include "spinmon/scalars.hpp"

using namespace spinmon;

namespace {

CycNumber random_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), zero(0, 2);
  CycNumber::Coeffs c;
  for (auto& x : c)
    if (zero(rng) != 0) x = mpq_class(num(rng), den(rng));
  return CycNumber(c);
}

// Schoolbook product with explicit reduction z^8 = -1, written independently
// of the library's product.
CycNumber reference_mul(const CycNumber& a, const CycNumber& b) {
  std::array<mpq_class, 15> full;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) full[i + j] += a.coeff(i) * b.coeff(j);
  CycNumber::Coeffs c;
  for (int k = 0; k < 15; ++k) {
    if (k < 8) c[k] += full[k];
    else c[k - 8] -= full[k];
  }
  return CycNumber(c);
}

}  // namespace

TEST_CASE("cyc_mul examples") {
  CycNumber z8 = cyc_root(16, 8);
  CHECK(cyc_mul(z8, z8) == CycNumber(1));
  CHECK(cyc_mul(cyc_root(8, 1), cyc_root(8, 1)) == cyc_root(4, 1));
  CycNumber s = cyc_mul(cyc_root(8, 1), CycNumber(1) - cyc_root(4, 1));
  CHECK(cyc_mul(s, s) == CycNumber(2));
}

TEST_CASE("cyc_inv examples") {
  CHECK(cyc_inv(CycNumber(1)) == CycNumber(1));
  CHECK(cyc_inv(cyc_root(4, 1)) == -cyc_root(4, 1));
  CHECK(cyc_inv(CycNumber(2)) == CycNumber(mpq_class(1, 2)));
  CHECK_THROWS_AS(cyc_inv(CycNumber()), DomainError);
}

TEST_CASE("cyc_root examples") {
  CHECK(cyc_root(2, 1) == CycNumber(-1));
  CHECK(cyc_root(4, 1) == CycNumber::z_power(4));
  CHECK(cyc_root(16, 16) == CycNumber(1));
  CHECK_THROWS_AS(cyc_root(3, 1), DomainError);
  CHECK_THROWS_AS(cyc_root(32, 1), DomainError);
}

TEST_CASE("root compatibility chain") {
  CycNumber z = cyc_root(16, 1);
  CHECK(z.pow(16) == CycNumber(1));
  CHECK(z.pow(8) == CycNumber(-1));
  CHECK(z * z == cyc_root(8, 1));
  CHECK(cyc_root(8, 1) * cyc_root(8, 1) == cyc_root(4, 1));
  CHECK(cyc_root(4, 1) * cyc_root(4, 1) == CycNumber(-1));
  int order = 0;
  CycNumber p(1);
  do {
    p *= z;
    ++order;
  } while (!p.is_one());
  CHECK(order == 16);
}

TEST_CASE("embed_qsqrt2 examples") {
  CHECK(embed_qsqrt2(QSqrt2(1)) == CycNumber(1));
  CycNumber z8 = cyc_root(8, 1);
  CHECK(embed_qsqrt2(QSqrt2::sqrt2()) == z8 - z8 * cyc_root(4, 1));
  CycNumber half = embed_qsqrt2(QSqrt2(0, mpq_class(1, 2)));
  CHECK(half * half == CycNumber(mpq_class(1, 2)));
  CHECK(embed_qsqrt2(QSqrt2::sqrt2()) * embed_qsqrt2(QSqrt2::sqrt2()) == CycNumber(2));
}

TEST_CASE("field axioms on seeded triples") {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 1000; ++t) {
    CycNumber a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == reference_mul(a, b));
    if (!a.is_zero()) REQUIRE(a * cyc_inv(a) == CycNumber(1));
  }
}

TEST_CASE("embed_qsqrt2 is an injective ring map") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  for (int t = 0; t < 200; ++t) {
    QSqrt2 x(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    QSqrt2 y(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    CHECK(embed_qsqrt2(x * y) == embed_qsqrt2(x) * embed_qsqrt2(y));
    CHECK(embed_qsqrt2(x + y) == embed_qsqrt2(x) + embed_qsqrt2(y));
    CHECK(embed_qsqrt2(x).is_zero() == x.is_zero());
  }
}

TEST_CASE("QSqrt2 powers and rendering") {
  CHECK(QSqrt2::pow_sqrt2(2) == QSqrt2(2));
  CHECK(QSqrt2::pow_sqrt2(-1) == QSqrt2(0, mpq_class(1, 2)));
  CHECK(QSqrt2::pow_sqrt2(-3) == QSqrt2(0, mpq_class(1, 4)));
  CHECK(QSqrt2::pow_sqrt2(-1) * QSqrt2::sqrt2() == QSqrt2(1));
  CHECK(QSqrt2(0, mpq_class(1, 2)).str() == "1/2*sqrt2");
  CHECK(QSqrt2(mpq_class(1, 2)).str() == "1/2");
}

TEST_CASE("rendering and galois action") {
  CHECK(CycNumber().str() == "0");
  CHECK((CycNumber(mpq_class(1, 2)) + cyc_root(16, 3)).str() == "1/2 + 1*z^3");
  CHECK(cyc_root(16, 1).galois(3) == cyc_root(16, 3));
  CHECK(cyc_root(16, 5).as_root_of_unity() == 5);
  CHECK(cyc_root(16, 13).as_root_of_unity() == 13);
  CHECK(CycNumber(2).as_root_of_unity() == -1);
}

TEST_CASE("rationals are stored in lowest terms") {
  CHECK(CycNumber(mpq_class(3, 3)) == CycNumber(1));
  CHECK(CycNumber(mpq_class(2, 4)) == CycNumber(mpq_class(1, 2)));
  CycNumber x = CycNumber(mpq_class(3, 3)) + cyc_root(8, 1);
  CHECK(x * x.inv() == CycNumber(1));
}
