#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qreg/scheme.hpp"

using namespace qreg;

namespace {

AssociationScheme complete_graph(std::size_t n) {
  std::vector<std::uint8_t> rel(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 0;
  return AssociationScheme::from_relations(n, std::move(rel));
}

AssociationScheme cycle(std::size_t n) {
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::size_t d = (j + n - i) % n;
      d = std::min(d, n - d);
      rel[i * n + j] = static_cast<std::uint8_t>(d);
    }
  return AssociationScheme::from_relations(n, std::move(rel));
}

}  // namespace

TEST_CASE("complete graph parameters") {
  auto s = complete_graph(5);
  CHECK(s.classes() == 1);
  CHECK(s.valency(1) == 4);
  CHECK(s.p(1, 1, 1) == 3);
  CHECK(s.p(1, 1, 0) == 4);
  CHECK(s.P().at(0, 1) == QuadNum(4));
  CHECK(s.P().at(1, 1) == QuadNum(-1));
  CHECK(s.multiplicities()[0] == 1);
  CHECK(s.multiplicities()[1] == 4);
  // a_1^* = n - 2 for the complete graph.
  CHECK(s.a1_star() == QuadNum(3));
}

TEST_CASE("4-cycle: two classes, antipodal") {
  auto s = cycle(4);
  CHECK(s.classes() == 2);
  CHECK(s.valency(1) == 2);
  CHECK(s.valency(2) == 1);
  mpz_class total = 0;
  for (auto& m : s.multiplicities()) total += m;
  CHECK(total == 4);
}

TEST_CASE("P and Q are inverse up to n") {
  for (auto s : {cycle(5), cycle(6), complete_graph(7)}) {
    std::size_t n = s.points();
    auto prod = s.P() * s.Q();
    auto expect = ExactMatrix::identity(s.classes() + 1);
    for (std::size_t i = 0; i <= s.classes(); ++i)
      expect.at(i, i) = QuadNum(static_cast<long>(n));
    CHECK(prod == expect);
  }
}

TEST_CASE("Krein parameters are nonnegative and triangle-symmetric") {
  // cycle(8) exercises eigenvalues in a quadratic field (+-sqrt 2).
  for (auto s : {cycle(6), cycle(8), complete_graph(6)}) {
    unsigned d = s.classes();
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; j <= d; ++j)
        for (unsigned k = 0; k <= d; ++k) {
          CHECK(s.krein(i, j, k).sign() >= 0);
          CHECK(s.krein(i, j, k) == s.krein(j, i, k));
        }
    // sum_j q_{ij}^k = m_i for any fixed k.
    for (unsigned i = 0; i <= d; ++i) {
      QuadNum rowsum;
      for (unsigned k = 0; k <= d; ++k) rowsum += s.krein(i, k, 1);
      CHECK(rowsum == QuadNum(mpq_class(s.multiplicities()[i])));
    }
  }
}

TEST_CASE("q_structure on reference schemes") {
  auto k5 = complete_graph(5).q_structure();
  CHECK(k5.is_q_polynomial);  // one class, trivially
  auto c6 = cycle(6).q_structure();
  CHECK(c6.is_q_polynomial);
  // C6 is bipartite and antipodal on both sides of duality.
  CHECK(c6.is_q_bipartite);
  auto c4 = cycle(4).q_structure();
  CHECK(c4.antipodal_class_count == 2);
}

TEST_CASE("subconstituents of the 6-cycle") {
  auto s = cycle(6);
  auto pts = s.subconstituent_points(0, 1);
  CHECK(pts == std::vector<std::size_t>{1, 5});
  auto sub = s.subconstituent(0, 1);
  CHECK(sub.points() == 2);
  CHECK(sub.classes() == 1);
}

TEST_CASE("inconsistent relation table is rejected") {
  // Pentagon with one edge flipped: intersection numbers vary.
  std::size_t n = 5;
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::size_t d = (j + n - i) % n;
      rel[i * n + j] = (d == 1 || d == 4) ? 1 : 2;
    }
  rel[0 * n + 1] = 2;
  rel[1 * n + 0] = 2;
  rel[0 * n + 2] = 1;
  rel[2 * n + 0] = 1;
  CHECK_THROWS(AssociationScheme::from_relations(n, std::move(rel)));
}
