#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qreg/geometry.hpp"

using namespace qreg;

namespace {

// Cross polytope {+-e_1, ..., +-e_m}: 2m points, angles {0, -1}.
GramSet cross_polytope(std::size_t m) {
  GramSet x;
  x.size = 2 * m;
  x.ambient_dim = m;
  x.gram = ExactMatrix(x.size, x.size);
  for (std::size_t i = 0; i < x.size; ++i) {
    for (std::size_t j = 0; j < x.size; ++j) {
      if (i == j)
        x.gram.at(i, j) = QuadNum(1);
      else if (i / 2 == j / 2)
        x.gram.at(i, j) = QuadNum(-1);
    }
    x.labels.push_back(std::to_string(i));
  }
  return x;
}

GramSet antipodal_pair() {
  GramSet x;
  x.size = 2;
  x.ambient_dim = 3;
  x.gram = ExactMatrix(2, 2);
  x.gram.at(0, 0) = x.gram.at(1, 1) = QuadNum(1);
  x.gram.at(0, 1) = x.gram.at(1, 0) = QuadNum(-1);
  x.labels = {"p", "-p"};
  return x;
}

}  // namespace

TEST_CASE("gegenbauer normalization") {
  CHECK(gegenbauer(0, 5, QuadNum::rational(1, 3)) == QuadNum(1));
  CHECK(gegenbauer(1, 4, QuadNum::rational(1, 2)) == QuadNum(2));
  // Q_2(1) = dim Harm_2 on S^2 = 5; cross-checked against the closed form
  // Q_2(t) = (m(m+2) t^2 - m) * (m-1) / (2(m-1)) evaluated symbolically.
  CHECK(gegenbauer(2, 3, QuadNum(1)) == QuadNum(5));
  // Closed form oracle for m = 3: Q_2(t) = (15 t^2 - 5)/2.
  for (long num = -2; num <= 2; ++num) {
    QuadNum t = QuadNum::rational(num, 2);
    QuadNum oracle = (QuadNum(15) * t * t - QuadNum(5)) / QuadNum(2);
    CHECK(gegenbauer(2, 3, t) == oracle);
  }
  // Q_k(1) = dim Harm_k for a spread of k and m.
  auto harm = [](long m, long k) -> long {
    auto binom = [](long n, long r) -> long {
      if (r < 0 || r > n) return 0;
      long b = 1;
      for (long i = 1; i <= r; ++i) b = b * (n - r + i) / i;
      return b;
    };
    return binom(m + k - 1, k) - binom(m + k - 3, k - 2);
  };
  for (unsigned m = 2; m <= 6; ++m)
    for (unsigned k = 0; k <= 5; ++k)
      CHECK(gegenbauer(k, m, QuadNum(1)) == QuadNum(harm(m, k)));
}

TEST_CASE("design strengths of reference configurations") {
  CHECK(design_strength(cross_polytope(4)) == 3);
  CHECK(design_strength(cross_polytope(14)) == 3);
  CHECK(design_strength(antipodal_pair()) == 1);
  // Regular simplex of q points in S^{m-1} is a 2-design iff m = q - 1.
  auto simplex = [](std::size_t q, std::size_t m) {
    GramSet x;
    x.size = q;
    x.ambient_dim = m;
    x.gram = ExactMatrix(q, q);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        x.gram.at(i, j) = i == j ? QuadNum(1)
                                 : QuadNum::rational(-1, static_cast<long>(q) - 1);
    return x;
  };
  CHECK(design_strength(simplex(15, 14)) == 2);
  CHECK(design_strength(simplex(8, 14)) == 1);
}

TEST_CASE("antipodal sets kill all odd Gegenbauer sums") {
  GramSet x = cross_polytope(5);
  unsigned m = static_cast<unsigned>(x.ambient_dim);
  for (unsigned k = 1; k <= 7; k += 2) {
    QuadNum sum;
    for (std::size_t i = 0; i < x.size; ++i)
      for (std::size_t j = 0; j < x.size; ++j)
        sum += gegenbauer(k, m, x.gram.at(i, j));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("derive_one on a single-point fiber") {
  GramSet x = cross_polytope(3);
  // Around +e_1 at angle 0 there are 4 points; at angle -1 exactly one.
  CHECK_THROWS_AS(derive_one(x, 0, QuadNum(-1)), DegenerateAngle);
  auto d = derive_one(x, 0, QuadNum(0));
  CHECK(d.size == 4);
  CHECK(d.ambient_dim == 2);
  // The fiber is itself a square (cross polytope in one lower dimension).
  auto angles = angle_set_prime(d);
  REQUIRE(angles.size() == 2);
  CHECK(angles[0] == QuadNum(0));
  CHECK(angles[1] == QuadNum(-1));
}

TEST_CASE("annihilator expansion, single angle") {
  // A' = {-1}: F(t) = (t+1)/2 = 1/2 Q_0 + 1/(2m) Q_1.
  GramSet x = antipodal_pair();
  auto f = annihilator_expand(x);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == QuadNum::rational(1, 2));
  CHECK(f[1] == QuadNum::rational(1, 6));
  // F(1) = sum f_k Q_k(1) = 1.
  QuadNum total;
  for (unsigned k = 0; k < f.size(); ++k)
    total += f[k] * gegenbauer(k, static_cast<unsigned>(x.ambient_dim), QuadNum(1));
  CHECK(total == QuadNum(1));
}
