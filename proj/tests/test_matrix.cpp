#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qreg/matrix.hpp"

using namespace qreg;

namespace {

ExactMatrix from_longs(std::size_t n, std::initializer_list<long> vals) {
  ExactMatrix m(n, n);
  auto it = vals.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = QuadNum(*it++);
  return m;
}

}  // namespace

TEST_CASE("determinant and inverse") {
  auto m = from_longs(3, {2, 1, 0, 1, 3, 1, 0, 1, 2});
  CHECK(m.determinant() == QuadNum(8));
  CHECK(m * m.inverse() == ExactMatrix::identity(3));

  auto sing = from_longs(2, {1, 2, 2, 4});
  CHECK(sing.determinant() == QuadNum(0));
  CHECK(sing.null_space().size() == 1);
}

TEST_CASE("char_poly_roots on small cases") {
  // Complete-graph intersection matrix, n = 5: eigenvalues {4, -1}.
  auto b1 = from_longs(2, {0, 4, 1, 3});
  auto roots = char_poly_roots(b1);
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == QuadNum(-1));
  CHECK(roots[1] == QuadNum(4));

  auto id = ExactMatrix::identity(3);
  auto r3 = char_poly_roots(id);
  CHECK(r3.size() == 3);
  for (auto& r : r3) CHECK(r == QuadNum(1));
}

TEST_CASE("roots with quadratic irrationalities") {
  // [[0, 2], [1, 0]] has eigenvalues +-sqrt(2).
  auto m = from_longs(2, {0, 2, 1, 0});
  auto roots = char_poly_roots(m);
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 2);
  CHECK(roots[1] == QuadNum(0, 1, 2));
  CHECK(roots[0] == -roots[1]);

  // (t^2 - 2)(t^2 - 8): all roots in Q(sqrt(2)).
  auto rs = roots_in_field({QuadNum(16), QuadNum(0), QuadNum(-10), QuadNum(0), QuadNum(1)});
  CHECK(rs.size() == 4);

  // (t^2 - 2)(t^2 - 3) does not split over one quadratic field.
  CHECK_THROWS_AS(
      roots_in_field({QuadNum(6), QuadNum(0), QuadNum(-5), QuadNum(0), QuadNum(1)}),
      NotSplitOverField);
}

TEST_CASE("quartic residual via resolvent cubic") {
  // (t^2 - 2t - 1)(t^2 - 6t + 7): roots 1 +- sqrt(2), 3 +- sqrt(2).
  std::vector<QuadNum> p{QuadNum(-7), QuadNum(-8), QuadNum(18), QuadNum(-8), QuadNum(1)};
  auto rs = roots_in_field(p);
  REQUIRE(rs.size() == 4);
  for (auto& r : rs) {
    QuadNum v;
    for (std::size_t i = p.size(); i-- > 0;) v = v * r + p[i];
    CHECK(v.is_zero());
  }
}

TEST_CASE("every reported eigenvalue satisfies det(M - lambda I) = 0") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> val(-3, 3);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 3;
    // Symmetric integer matrices usually split after deflation; skip the
    // ones that genuinely do not.
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        QuadNum v(val(rng));
        m.at(i, j) = v;
        m.at(j, i) = v;
      }
    try {
      auto roots = char_poly_roots(m);
      CHECK(roots.size() == n);
      for (auto& lam : roots) {
        ExactMatrix s = m;
        for (std::size_t i = 0; i < n; ++i) s.at(i, i) -= lam;
        CHECK(s.determinant() == QuadNum(0));
      }
    } catch (const NotSplitOverField&) {
      // acceptable outcome for random matrices
    }
  }
}

TEST_CASE("solve_linear") {
  auto m = from_longs(2, {1, 2, 3, 5});
  std::vector<QuadNum> b{QuadNum(5), QuadNum(13)};
  auto x = solve_linear(m, b);
  CHECK(m.apply(x) == b);
}
