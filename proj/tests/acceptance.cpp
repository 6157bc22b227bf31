#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>
#include <set>

#include "qreg/codes.hpp"
#include "qreg/designs.hpp"
#include "qreg/json_io.hpp"
#include "qreg/regularity.hpp"

using namespace qreg;

namespace {

void line(int num, const char* desc, bool ok) {
  std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", num, desc);
  std::fflush(stdout);
  CHECK_MESSAGE(ok, desc);
}

const MUBSet& mub4() {
  static MUBSet m = construct_d4();
  return m;
}
const MUBSet& mub16() {
  static MUBSet m = construct_d16();
  return m;
}
const AssociationScheme& scheme4() {
  static AssociationScheme s = mub_to_scheme(mub4());
  return s;
}
const AssociationScheme& scheme16() {
  static AssociationScheme s = mub_to_scheme(mub16());
  return s;
}
const AssociationScheme& derived16() {
  static AssociationScheme s = scheme16().subconstituent(0, 1);
  return s;
}
// The f = 8 system of (16,6,2) designs carried by the derived scheme.
const LinkedSystem& system8() {
  static LinkedSystem sys = scheme_to_lsd(derived16()).complemented();
  return sys;
}

// Always-on spectral property suite for a constructed scheme.
bool property_suite(const AssociationScheme& s) {
  unsigned d = s.classes();
  std::size_t n = s.points();
  // P Q = n I.
  const ExactMatrix &P = s.P(), &Q = s.Q();
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) {
      QuadNum sum(0);
      for (std::size_t k = 0; k <= d; ++k) sum += P.at(i, k) * Q.at(k, j);
      if (sum != (i == j ? QuadNum(static_cast<long>(n)) : QuadNum(0))) return false;
    }
  // Krein parameters: nonnegative, symmetric, and summing to multiplicities.
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; j <= d; ++j) {
      QuadNum sum(0);
      for (unsigned k = 0; k <= d; ++k) {
        const QuadNum q = s.krein(i, j, k);
        if (q.sign() < 0) return false;
        if (q != s.krein(j, i, k)) return false;
        sum += q;
      }
      (void)sum;
    }
  for (unsigned i = 0; i <= d; ++i) {
    QuadNum sum(0);
    for (unsigned j = 0; j <= d; ++j) sum += s.krein(i, j, 0) * QuadNum(1);
    // q_{i,j}^0 = m_i delta_{i,j}.
    if (sum != QuadNum(mpq_class(s.multiplicities()[i]))) return false;
  }
  // Triangle-count symmetry k_i p_{j,l}^i = k_j p_{i,l}^j.
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; j <= d; ++j)
      for (unsigned l = 0; l <= d; ++l)
        if (s.valency(i) * s.p(j, l, i) != s.valency(j) * s.p(i, l, j)) return false;
  return true;
}

QuadNum quarter() { return QuadNum(mpq_class(1, 4)); }

// First point of the d=16 Gram set at the given inner product with point 0.
std::size_t partner_at(const GramSet& x, const QuadNum& value) {
  for (std::size_t p = 1; p < x.size; ++p)
    if (x.inner(0, p) == value) return p;
  REQUIRE(false);
  return 0;
}

}  // namespace

TEST_CASE("criterion 1: maximal d=4 system is quadruply regular") {
  bool ok = mub4().f == 3 && mub4().d == 4;
  auto qs = scheme4().q_structure();
  ok = ok && qs.is_q_bipartite && qs.is_q_antipodal;
  ok = ok && triple_regular(scheme4()).verdict;
  ok = ok && quadruple_regular(scheme4()).verdict;
  ok = ok && property_suite(scheme4());
  line(1, "d=4 maximal system: Q-bipartite, Q-antipodal, 3- and 4-regular", ok);
}

TEST_CASE("criterion 2: maximal d=16 system is regular in both scans") {
  bool ok = scheme16().points() == 288;
  ok = ok && triple_regular(scheme16()).verdict;
  auto r4 = quadruple_regular(scheme16(), ScanMode::structured, 0, 1, 200);
  ok = ok && r4.verdict && !r4.witness;
  ok = ok && property_suite(scheme16());
  line(2, "d=16 maximal system: 288 points, exhaustive triple, structured quadruple",
       ok);
}

TEST_CASE("criterion 3: three bases of the d=16 system fail quadruple regularity") {
  auto sub = sub_mub(mub16(), {0, 1, 2});
  auto s = mub_to_scheme(sub);
  auto r = quadruple_regular(s, ScanMode::sampled, 200000, 5);
  bool ok = !r.verdict && r.witness.has_value();
  auto d = s.subconstituent(0, 1);
  ok = ok && d.a1_star() == QuadNum(6);  // d/(f-1) - 2 at d=16, f=3
  ok = ok && !triple_regular(d).verdict;
  ok = ok && property_suite(s) && property_suite(d);
  line(3, "f=3 subsystem: sampled 4-point witness, a1*=6, derived scheme not 3-regular",
       ok);
}

TEST_CASE("criterion 4: derived-scheme matrices match their closed forms") {
  const AssociationScheme& s = derived16();
  auto c = derived_closed_forms(16, 9);
  bool ok = property_suite(s);
  ok = ok && c.B1.at(1, 0) == QuadNum(70) && c.B1star.at(1, 1) == QuadNum(0);
  for (unsigned i = 1; i <= 3 && ok; ++i) {
    auto b = s.intersection_matrix(i);
    const ExactMatrix& e = i == 1 ? c.B1 : i == 2 ? c.B2 : c.B3;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t k = 0; k < 4; ++k) ok = ok && b.at(r, k) == e.at(r, k);
  }
  // Align eigenspaces by matching whole Q columns.
  std::vector<std::size_t> perm(4, 4);
  std::vector<bool> used(4, false);
  for (std::size_t cf = 0; cf < 4; ++cf)
    for (std::size_t sc = 0; sc < 4 && perm[cf] == 4; ++sc) {
      if (used[sc]) continue;
      bool all = true;
      for (std::size_t r = 0; r < 4; ++r)
        if (s.Q().at(r, sc) != c.Q.at(r, cf)) all = false;
      if (all) perm[cf] = sc, used[sc] = true;
    }
  for (std::size_t cf = 0; cf < 4; ++cf) ok = ok && perm[cf] != 4;
  if (ok)
    for (unsigned r = 0; r < 4; ++r)
      for (unsigned k = 0; k < 4; ++k)
        ok = ok && s.krein(static_cast<unsigned>(perm[1]),
                           static_cast<unsigned>(perm[r]),
                           static_cast<unsigned>(perm[k])) == c.B1star.at(r, k);
  line(4, "d=16, f=9 derived scheme: B1, B2, B3, Q, B1* equal their closed forms", ok);
}

TEST_CASE("criterion 5: triple regularity, a1* = 0, and the fiber bound agree") {
  // a1* is read in the Q-polynomial idempotent ordering, which need not be
  // the stored eigenspace order of a rebuilt scheme.
  auto a1star = [](const AssociationScheme& s) {
    auto o = s.q_structure().ordering;
    return s.krein(o[1], o[1], o[1]);
  };
  auto s8 = lsd_to_scheme(system8());
  bool t8 = triple_regular(s8).verdict;
  bool a8 = a1star(s8) == QuadNum(0);
  auto n8 = noda_check(system8());
  bool ok = t8 && a8 && n8.is_equality && n8.rhs == QuadNum(7);

  auto sys3 = system8().restrict_fibers({0, 1, 2});
  auto s3 = lsd_to_scheme(sys3);
  bool t3 = triple_regular(s3).verdict;
  bool a3 = a1star(s3) == QuadNum(0);
  auto n3 = noda_check(sys3);
  ok = ok && !t3 && !a3 && !n3.is_equality && n3.rhs == QuadNum(7);
  ok = ok && property_suite(s8) && property_suite(s3);
  line(5, "f=8 and f=3 (16,6,2) systems: {3-regular, a1*=0, bound equality} agree",
       ok);
}

TEST_CASE("criterion 6: 4-subset counting identities on one fiber") {
  auto r = quad_counting(system8(), 0);
  mpz_class total = 0;
  for (auto& [a, c] : r.histogram) total += c;
  bool ok = total == 1820 && r.sum_alpha == 1680 && r.sum_alpha_choose2 == 0 &&
            !r.is_4_design;
  line(6, "f=8 system fiber: sum alpha = 1680, sum C(alpha,2) = 0, not a 4-design",
       ok);
}

TEST_CASE("criterion 7: quartic obstruction and perfect-square scan") {
  auto q = quartic_obstruction(16, 6);
  bool ok = q.value == 64 && !q.square_check;
  auto hits = quartic_square_scan(1, 1000000);
  ok = ok && hits == std::vector<long>{1, 3};
  line(7, "quartic(16,6) = 64 != 0; v(v-1)(v+3) square only at v in {1,3} up to 1e6",
       ok);
}

TEST_CASE("criterion 8: code-side identities") {
  auto c = extract_code(mub16(), 0);
  auto w = weight_enumerator(c);
  bool ok = c.words.size() == 256 && w.coeff[0] == 1 && w.coeff[6] == 112 &&
            w.coeff[8] == 30 && w.coeff[10] == 112 && w.coeff[16] == 1;
  mpz_class nonzero = 0;
  for (std::size_t i = 1; i < w.coeff.size(); ++i)
    if (i != 6 && i != 8 && i != 10 && i != 16) nonzero += w.coeff[i];
  ok = ok && nonzero == 0;
  auto dual = macwilliams(w, 256);
  for (int j = 1; j <= 5; ++j) ok = ok && dual[j] == 0;
  ok = ok && dual[6] == mpq_class(16 * 15 * 14 * 12) / 360;
  ok = ok && oa_strength(c) == 5;
  ok = ok && joint_quintuple_counts(mub16(), 0, {0, 1, 2, 3, 4}, {1, 1, 1, 1, 1}) == 8;
  ok = ok && joint_quintuple_counts(mub16(), 0, {2, 5, 7, 11, 13}, {3, 1, 3, 1, 3}) == 8;

  auto c4 = extract_code(mub4(), 0);
  std::set<std::vector<std::uint8_t>> distinct(c4.words.begin(), c4.words.end());
  ok = ok && c4.length == 4 && distinct.size() == 16 && oa_strength(c4) == 4;
  line(8, "d=16 code: weights (1,112,30,112,1), dual gap to 6, strength 5, "
          "uniform quintuples; d=4 code is the full 4-bit space",
       ok);
}

TEST_CASE("criterion 9: derived configurations and their design strengths") {
  auto x = mub_gram(mub16());
  QuadNum g = quarter();

  auto d1 = derive_one(x, 0, g);
  auto a1 = angle_set(d1);
  bool ok = a1 == std::vector<QuadNum>{QuadNum(mpq_class(1, 5)),
                                       QuadNum(mpq_class(-1, 15)),
                                       QuadNum(mpq_class(-1, 3))};

  std::size_t zmid = partner_at(x, QuadNum(0));
  auto x11 = derive_two(x, 0, zmid, g, g);
  ok = ok && x11.size == 64;
  ok = ok && angle_set(x11) == std::vector<QuadNum>{QuadNum(mpq_class(1, 7)),
                                                    QuadNum(mpq_class(-1, 7)),
                                                    QuadNum(mpq_class(-3, 7))};
  ok = ok && design_strength(x11) == 3;
  auto x22 = derive_two(x, 0, zmid, QuadNum(0), QuadNum(0));
  ok = ok && x22.size == 28 && design_strength(x22) == 3;  // cross polytope

  std::size_t zplus = partner_at(x, g);
  auto x12 = derive_two(x, 0, zplus, g, QuadNum(0));
  ok = ok && design_strength(x12) == 2;  // regular simplex

  ok = ok && !check_intersection_table(x, 0, zmid, 16).has_value();
  line(9, "d=16 derived cells: angle sets, strengths (3,3,2), |X_{1,1}| = 64, "
          "and the full two-cell count table",
       ok);
}

TEST_CASE("criterion 10: cross-angle count matrices of the two cell families") {
  auto x = mub_gram(mub16());
  QuadNum g = quarter();

  std::size_t zmid = partner_at(x, QuadNum(0));
  std::vector<std::size_t> cell_of;
  auto u = derive_two_union(
      x, 0, zmid, {{QuadNum(0), QuadNum(0)}, {g, g}, {g, -g}}, &cell_of);
  std::vector<std::vector<std::size_t>> fam(3);
  for (std::size_t p = 0; p < u.size; ++p) fam[cell_of[p]].push_back(p);
  auto rep = condition_ladder(u, fam);
  bool ok = rep.s == std::vector<std::vector<unsigned>>{{1, 2, 2}, {2, 3, 3},
                                                        {2, 3, 3}};

  std::size_t zplus = partner_at(x, g);
  std::vector<std::size_t> cell_of2;
  auto u2 = derive_two_union(
      x, 0, zplus, {{QuadNum(0), g}, {g, QuadNum(0)}, {g, g}, {g, -g}}, &cell_of2);
  std::vector<std::vector<std::size_t>> fam2(4);
  for (std::size_t p = 0; p < u2.size; ++p) fam2[cell_of2[p]].push_back(p);
  auto rep2 = condition_ladder(u2, fam2);
  ok = ok && rep2.s == std::vector<std::vector<unsigned>>{
                           {1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 3, 3}, {2, 2, 3, 3}};
  line(10, "cross-angle count matrices at both pair angles match", ok);
}

TEST_CASE("property suite: MacWilliams involution on linear codes") {
  // Even-weight code of length 6 and repetition code of length 7.
  auto involution = [](const BinaryCode& c) {
    auto w = weight_enumerator(c);
    auto d1 = macwilliams(w, mpz_class(static_cast<long>(c.words.size())));
    WeightEnumerator dw;
    mpz_class dual_size = 0;
    for (auto& q : d1) {
      REQUIRE(q.get_den() == 1);
      dw.coeff.push_back(q.get_num());
      dual_size += q.get_num();
    }
    auto d2 = macwilliams(dw, dual_size);
    for (std::size_t i = 0; i < d2.size(); ++i)
      if (d2[i] != w.coeff[i]) return false;
    return true;
  };
  BinaryCode even;
  even.length = 6;
  for (unsigned v = 0; v < 64; ++v) {
    if (__builtin_popcount(v) % 2) continue;
    std::vector<std::uint8_t> bits(6);
    for (int b = 0; b < 6; ++b) bits[b] = (v >> b) & 1;
    even.words.push_back(bits);
  }
  BinaryCode rep;
  rep.length = 7;
  rep.words = {std::vector<std::uint8_t>(7, 0), std::vector<std::uint8_t>(7, 1)};
  bool ok = involution(even) && involution(rep);
  std::printf("%s  property: MacWilliams transform is an involution\n",
              ok ? "PASS" : "FAIL");
  CHECK(ok);
}

TEST_CASE("property suite: field axioms under fuzzing") {
  std::mt19937_64 rng(2024);
  auto rnd = [&]() {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = 1 + static_cast<long>(rng() % 9);
    long irr = static_cast<long>(rng() % 21) - 10;
    return QuadNum(mpq_class(num, den), mpq_class(irr, den), 5);
  };
  bool ok = true;
  for (int t = 0; t < 500 && ok; ++t) {
    QuadNum a = rnd(), b = rnd(), c = rnd();
    ok = ok && (a + b) + c == a + (b + c);
    ok = ok && (a * b) * c == a * (b * c);
    ok = ok && a * (b + c) == a * b + a * c;
    ok = ok && a + b == b + a && a * b == b * a;
    ok = ok && a - a == QuadNum(0);
    if (!b.is_zero()) ok = ok && (a / b) * b == a;
    ok = ok && a.conjugate().conjugate() == a;
    ok = ok && (a * b).conjugate() == a.conjugate() * b.conjugate();
  }
  std::printf("%s  property: quadratic-field arithmetic axioms (500 random triples)\n",
              ok ? "PASS" : "FAIL");
  CHECK(ok);
}
