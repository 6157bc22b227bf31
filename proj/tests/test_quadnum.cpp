#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qreg/quadnum.hpp"

using namespace qreg;

TEST_CASE("sqrt_int square-free decomposition") {
  QuadNum a = sqrt_int(16);
  CHECK(a == QuadNum(4));
  CHECK(a.radicand() == 1);

  QuadNum b = sqrt_int(15);
  CHECK(b.rat_part() == 0);
  CHECK(b.irr_part() == 1);
  CHECK(b.radicand() == 15);

  QuadNum c = sqrt_int(60);
  CHECK(c.rat_part() == 0);
  CHECK(c.irr_part() == 2);
  CHECK(c.radicand() == 15);

  CHECK(sqrt_int(0) == QuadNum(0));
  CHECK((b * b) == QuadNum(15));
  CHECK((c * c) == QuadNum(60));
}

TEST_CASE("sign by exact case analysis") {
  CHECK(QuadNum(1, -1, 2).sign() == -1);      // 1 < sqrt(2)
  CHECK(QuadNum(0, 0, 5).sign() == 0);
  CHECK(QuadNum(-3, 2, 3).sign() == 1);       // 2 sqrt(3) > 3 since 12 > 9
  CHECK(QuadNum(3, -2, 3).sign() == -1);
  CHECK(QuadNum(2, -1, 3).sign() == 1);       // 4 > 3
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  auto rand_q = [&]() {
    return QuadNum(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), 7);
  };
  for (int it = 0; it < 200; ++it) {
    QuadNum x = rand_q(), y = rand_q(), z = rand_q();
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + (y + z) == (x + y) + z);
    CHECK(x - x == QuadNum(0));
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == QuadNum(1));
      CHECK((y / x) * x == y);
      CHECK(x.sign() * (-x).sign() == -1);
    }
  }
}

TEST_CASE("ordering is total and transitive") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
  auto rand_q = [&]() {
    return QuadNum(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), 5);
  };
  for (int it = 0; it < 200; ++it) {
    QuadNum x = rand_q(), y = rand_q(), z = rand_q();
    int cmp = (x < y) + (x == y) + (y < x);
    CHECK(cmp == 1);
    if (x < y && y < z) CHECK(x < z);
    // Agreement with the floating image, away from ties.
    if (x != y) CHECK(((x < y) == (x.to_double() < y.to_double())));
  }
}

TEST_CASE("mixed radicands reject, rationals promote") {
  QuadNum a(0, 1, 2), b(0, 1, 3);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK(a + QuadNum(5) == QuadNum(5, 1, 2));
  CHECK(QuadNum::rational(1, 2) * a == QuadNum(0, mpq_class(1, 2), 2));
}

TEST_CASE("sqrt_in_field") {
  CHECK(*QuadNum::rational(9, 4).sqrt_in_field() == QuadNum::rational(3, 2));
  CHECK(!QuadNum(0, -2, 5).sqrt_in_field().has_value());  // negative value
  // (1 + sqrt(3)/2)^2 = 7/4 + sqrt(3)
  QuadNum v(mpq_class(7, 4), 1, 3);
  auto r = v.sqrt_in_field();
  REQUIRE(r.has_value());
  CHECK(*r * *r == v);
  CHECK(r->sign() > 0);
  // 1 + sqrt(2) has no square root in Q(sqrt(2)).
  CHECK(!QuadNum(1, 1, 2).sqrt_in_field().has_value());
  // sqrt of a negative number does not exist.
  CHECK(!QuadNum(-4).sqrt_in_field().has_value());
}
