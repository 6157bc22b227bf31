#include "qreg/mub.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace qreg {

namespace {

QuadNum dot(const std::vector<QuadNum>& u, const std::vector<QuadNum>& v) {
  QuadNum s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace

MUBSet verify_mub(std::vector<std::vector<std::vector<QuadNum>>> bases) {
  if (bases.empty()) throw std::invalid_argument("verify_mub: no bases");
  std::size_t d = bases[0].empty() ? 0 : bases[0][0].size();
  if (d == 0) throw std::invalid_argument("verify_mub: empty basis");
  for (auto& b : bases) {
    if (b.size() != d) throw NotOrthonormal("basis has wrong vector count");
    for (auto& v : b)
      if (v.size() != d) throw NotOrthonormal("vector has wrong length");
  }
  std::size_t f = bases.size();
  if (2 * f > d + 2)
    throw BoundExceeded("f = " + std::to_string(f) + " exceeds d/2 + 1 with d = " +
                        std::to_string(d));
  QuadNum inv_d = QuadNum(1) / QuadNum(static_cast<long>(d));
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t u = 0; u < d; ++u) {
      for (std::size_t v = u; v < d; ++v) {
        QuadNum g = dot(bases[i][u], bases[i][v]);
        if (g != (u == v ? QuadNum(1) : QuadNum(0)))
          throw NotOrthonormal("basis " + std::to_string(i) + ", vectors " +
                               std::to_string(u) + "," + std::to_string(v) +
                               ": inner product " + g.str());
      }
      for (std::size_t j = i + 1; j < f; ++j)
        for (std::size_t v = 0; v < d; ++v) {
          QuadNum g = dot(bases[i][u], bases[j][v]);
          if (g * g != inv_d)
            throw NotUnbiased("bases " + std::to_string(i) + "," +
                              std::to_string(j) + ", vectors " + std::to_string(u) +
                              "," + std::to_string(v) + ": inner product " +
                              g.str());
        }
    }
  MUBSet m;
  m.d = d;
  m.f = f;
  m.D = squarefree_part(mpz_class(static_cast<unsigned long>(d))).get_ui();
  m.bases = std::move(bases);
  return m;
}

MUBSet construct_d4() {
  // Candidate vectors: the 16 sign patterns with entries +-1/2.
  std::vector<std::vector<QuadNum>> cand;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<QuadNum> v(4);
    for (int i = 0; i < 4; ++i)
      v[i] = QuadNum::rational((mask >> i) & 1 ? -1 : 1, 2);
    cand.push_back(std::move(v));
  }
  auto orthogonal = [&](int a, int b) { return dot(cand[a], cand[b]).is_zero(); };
  // All orthonormal quadruples, in lexicographic order.
  std::vector<std::array<int, 4>> quads;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      if (!orthogonal(a, b)) continue;
      for (int c = b + 1; c < 16; ++c) {
        if (!orthogonal(a, c) || !orthogonal(b, c)) continue;
        for (int e = c + 1; e < 16; ++e)
          if (orthogonal(a, e) && orthogonal(b, e) && orthogonal(c, e))
            quads.push_back({a, b, c, e});
      }
    }
  QuadNum quarter = QuadNum::rational(1, 4);
  for (std::size_t p = 0; p < quads.size(); ++p)
    for (std::size_t q = p + 1; q < quads.size(); ++q) {
      bool ok = true;
      for (int a : quads[p])
        for (int b : quads[q]) {
          QuadNum g = dot(cand[a], cand[b]);
          if (g * g != quarter) ok = false;
        }
      if (!ok) continue;
      std::vector<std::vector<std::vector<QuadNum>>> bases(3);
      for (int i = 0; i < 4; ++i) {
        std::vector<QuadNum> e(4);
        e[i] = QuadNum(1);
        bases[0].push_back(std::move(e));
      }
      for (int a : quads[p]) bases[1].push_back(cand[a]);
      for (int b : quads[q]) bases[2].push_back(cand[b]);
      return verify_mub(std::move(bases));
    }
  throw std::logic_error("construct_d4: search failed");  // unreachable
}

namespace {

// Binary code underlying the d = 16 construction: a quaternary cyclic
// code of length 7 (lift of x^3 + x + 1), extended by a parity symbol
// and pushed through the Gray map 0,1,2,3 -> 00,01,11,10.
std::vector<std::uint16_t> nordstrom_robinson_words() {
  // Monic cubic over Z4 reducing to x^3 + x + 1 mod 2 and dividing
  // x^7 - 1 over Z4; eight lifts, exactly one works.
  std::array<int, 4> g{};
  bool found = false;
  for (int a0 : {1, 3})
    for (int a1 : {1, 3})
      for (int a2 : {0, 2}) {
        std::array<int, 8> r{};  // x^7 - 1
        r[7] = 1;
        r[0] = 3;
        for (int deg = 7; deg >= 3; --deg) {
          int c = r[deg] % 4;
          if (c == 0) continue;
          r[deg] = 0;
          r[deg - 1] = ((r[deg - 1] - c * a2) % 4 + 4) % 4;
          r[deg - 2] = ((r[deg - 2] - c * a1) % 4 + 4) % 4;
          r[deg - 3] = ((r[deg - 3] - c * a0) % 4 + 4) % 4;
        }
        if (r[0] == 0 && r[1] == 0 && r[2] == 0) {
          g = {a0, a1, a2, 1};
          found = true;
        }
      }
  if (!found) throw PartitionFailed("no cyclic generator lift divides x^7 - 1");

  std::vector<std::uint16_t> words;
  words.reserve(256);
  for (int msg = 0; msg < 256; ++msg) {
    std::array<int, 8> c{};  // length-7 word plus parity
    for (int i = 0; i < 4; ++i) {
      int mi = (msg >> (2 * i)) & 3;
      for (int j = 0; j < 4; ++j) c[i + j] = (c[i + j] + mi * g[j]) % 4;
    }
    int sum = std::accumulate(c.begin(), c.begin() + 7, 0);
    c[7] = (4 - sum % 4) % 4;
    std::uint16_t w = 0;
    for (int i = 0; i < 8; ++i) {
      static const int gray[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
      w |= static_cast<std::uint16_t>(gray[c[i]][0]) << (2 * i);
      w |= static_cast<std::uint16_t>(gray[c[i]][1]) << (2 * i + 1);
    }
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end())
    throw PartitionFailed("codewords not distinct");
  return words;
}

}  // namespace

MUBSet construct_d16() {
  auto words = nordstrom_robinson_words();
  // Components of the "Hamming distance in {8, 16}" graph: orthogonality
  // classes of the +-1/4 vectors.  Expect 8 components of 32 words.
  std::vector<int> comp(256, -1);
  std::vector<std::vector<std::uint16_t>> groups;
  for (int s = 0; s < 256; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      groups[id].push_back(words[x]);
      for (int y = 0; y < 256; ++y) {
        if (comp[y] >= 0) continue;
        int dist = __builtin_popcount(words[x] ^ words[y]);
        if (dist == 8 || dist == 16) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  if (groups.size() != 8)
    throw PartitionFailed("expected 8 orthogonality classes, found " +
                          std::to_string(groups.size()));
  std::vector<std::vector<std::vector<QuadNum>>> bases;
  bases.emplace_back();
  for (int i = 0; i < 16; ++i) {
    std::vector<QuadNum> e(16);
    e[i] = QuadNum(1);
    bases.back().push_back(std::move(e));
  }
  for (auto& grp : groups) {
    if (grp.size() != 32)
      throw PartitionFailed("orthogonality class of size " +
                            std::to_string(grp.size()));
    std::sort(grp.begin(), grp.end());
    bases.emplace_back();
    for (auto w : grp) {
      std::uint16_t anti = static_cast<std::uint16_t>(~w);
      if (anti < w) continue;  // one vector per antipodal pair
      if (std::find(grp.begin(), grp.end(), anti) == grp.end())
        throw PartitionFailed("class not closed under complement");
      std::vector<QuadNum> v(16);
      for (int i = 0; i < 16; ++i)
        v[i] = QuadNum::rational((w >> i) & 1 ? -1 : 1, 4);
      bases.back().push_back(std::move(v));
    }
    if (bases.back().size() != 16)
      throw PartitionFailed("class does not split into 16 antipodal pairs");
  }
  return verify_mub(std::move(bases));
}

MUBSet sub_mub(const MUBSet& m, const std::vector<std::size_t>& indices) {
  if (indices.empty()) throw EmptySelection("sub_mub: no bases selected");
  std::vector<std::vector<std::vector<QuadNum>>> bases;
  for (auto i : indices) {
    if (i >= m.f) throw std::out_of_range("sub_mub: basis index");
    bases.push_back(m.bases[i]);
  }
  return verify_mub(std::move(bases));
}

GramSet mub_gram(const MUBSet& m) {
  std::size_t half = m.f * m.d, n = 2 * half;
  GramSet x;
  x.size = n;
  x.ambient_dim = m.d;
  x.gram = ExactMatrix(n, n);
  auto vec = [&](std::size_t p) -> const std::vector<QuadNum>& {
    std::size_t q = p % half;
    return m.bases[q / m.d][q % m.d];
  };
  for (std::size_t p = 0; p < n; ++p) {
    x.labels.push_back((p < half ? "+" : "-") + std::to_string(p % half));
    for (std::size_t q = p; q < n; ++q) {
      QuadNum g = dot(vec(p), vec(q));
      if ((p < half) != (q < half)) g = -g;
      x.gram.at(p, q) = g;
      x.gram.at(q, p) = g;
    }
  }
  return x;
}

AssociationScheme mub_to_scheme(const MUBSet& m) {
  if (m.f < 2) throw std::invalid_argument("mub_to_scheme: need f >= 2");
  return AssociationScheme::from_gram(mub_gram(m));
}

GramSet gram_from_idempotent(const AssociationScheme& s) {
  if (s.classes() != 4)
    throw std::invalid_argument("gram_from_idempotent: need a 4-class scheme");
  unsigned d = s.classes();
  std::size_t n = s.points();
  QuadNum scale = s.Q().at(0, 1);  // = m_1
  std::vector<QuadNum> g(d + 1);
  for (unsigned k = 0; k <= d; ++k) g[k] = s.Q().at(k, 1) / scale;
  // Angle pattern {1, 1/sqrt(dim), 0, -1/sqrt(dim), -1} with dim = m_1.
  if (g[2] != QuadNum(0) || g[4] != QuadNum(-1) || g[3] != -g[1] ||
      g[1].sign() <= 0 || QuadNum(1) / (g[1] * g[1]) != scale)
    throw WrongAngles("class angles " + g[1].str() + ", " + g[2].str() + ", " +
                      g[3].str() + ", " + g[4].str());
  // Idempotency of (m_1/n) G.  Since the p-tensor is already verified,
  // (G^2)(x,y) depends only on rel(x,y) and the check reduces to classes.
  QuadNum m1n = scale / QuadNum(static_cast<long>(n));
  for (unsigned k = 0; k <= d; ++k) {
    QuadNum lhs;
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; j <= d; ++j)
        lhs += QuadNum(s.p(i, j, k)) * g[i] * g[j];
    if (m1n * lhs != g[k])
      throw NotIdempotent("class " + std::to_string(k) + ": (m1/n) sum p g g = " +
                          (m1n * lhs).str() + " != " + g[k].str());
  }
  GramSet x;
  x.size = n;
  x.ambient_dim = static_cast<std::size_t>(scale.rat_part().get_num().get_ui());
  x.gram = ExactMatrix(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    x.labels.push_back(std::to_string(p));
    for (std::size_t q = 0; q < n; ++q) x.gram.at(p, q) = g[s.rel(p, q)];
  }
  return x;
}

DerivedClosedForms derived_closed_forms(std::size_t d_, std::size_t f_) {
  QuadNum d(static_cast<long>(d_)), f(static_cast<long>(f_));
  QuadNum rd = sqrt_int(static_cast<long>(d_));
  QuadNum one(1), two(2), three(3), four(4);
  DerivedClosedForms c{ExactMatrix(4, 4), ExactMatrix(4, 4), ExactMatrix(4, 4),
                       ExactMatrix(4, 4), ExactMatrix(4, 4)};
  auto set = [](ExactMatrix& m, std::initializer_list<QuadNum> vals) {
    auto it = vals.begin();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = *it++;
  };
  QuadNum z(0);
  // Row 1, columns 2 and 3 carry the factors f - 2 and f - 3: the column
  // sums of B1 must equal the valency (f-2)(d + sqrt d)/2.
  set(c.B1, {z, one, z, z,
             (f - two) * (d + rd) / two, (f - three) * (d + three * rd) / four,
             (f - two) * (d + two * rd) / four, (f - three) * (d + rd) / four,
             z, (d + rd - two) / two, z, (d + rd) / two,
             z, (f - three) * (d - rd) / four, (f - two) * d / four,
             (f - three) * (d + rd) / four});
  set(c.B2, {z, z, one, z,
             z, (d + rd - two) / two, z, (d + rd) / two,
             d - one, z, d - two, z,
             z, (d - rd) / two, z, (d - rd - two) / two});
  set(c.B3, {z, z, z, one,
             z, (f - three) * (d - rd) / four, (f - two) * d / four,
             (f - three) * (d + rd) / four,
             z, (d - rd) / two, z, (d - rd - two) / two,
             (f - two) * (d - rd) / two, (f - three) * (d - rd) / four,
             (f - two) * (d - two * rd) / four, (f - three) * (d - three * rd) / four});
  // Second eigenmatrix of the derived scheme, which has f - 1 fibers.
  set(c.Q, {one, d - one, (f - two) * (d - one), f - two,
            one, rd - one, -rd + one, -one,
            one, -one, -(f - two), f - two,
            one, -rd - one, rd + one, -one});
  QuadNum g = f - one;
  set(c.B1star, {z, one, z, z,
                 d - one, d / g - two, d / g, z,
                 z, (f - two) * d / g, (f - two) * d / g - two, d - one,
                 z, z, one, z});
  return c;
}

std::optional<std::string> check_intersection_table(const GramSet& x, std::size_t z1,
                                                    std::size_t z2, std::size_t d) {
  long dd = static_cast<long>(d);
  if (x.inner(z1, z2) != QuadNum(0)) return "pair (z1, z2) is not at the middle angle";
  QuadNum g = QuadNum(1) / sqrt_int(dd);

  std::vector<std::size_t> cell_of;
  auto u = derive_two_union(x, z1, z2, {{QuadNum(0), QuadNum(0)}, {g, g}, {g, -g}},
                            &cell_of);
  // cells[c] lists the rows of cell X_{c+1} inside the union.
  std::vector<std::vector<std::size_t>> cells(3);
  for (std::size_t p = 0; p < u.size; ++p) cells[cell_of[p]].push_back(p);

  QuadNum rd = sqrt_int(dd);
  QuadNum half = QuadNum(dd) / 2 - 1;
  QuadNum pl = (QuadNum(dd) + QuadNum(2) * rd) / 4;
  QuadNum mn = (QuadNum(dd) - QuadNum(2) * rd) / 4;
  QuadNum qt = QuadNum(dd) / 4;
  QuadNum zero(0);

  struct Row {
    unsigned i, j, k, a, b;  // cells 1..3, angle positions 1..3
    QuadNum expect[3];       // by the cross-angle position of <x,y>
  };
  std::vector<Row> rows;
  for (unsigned c : {2u, 3u}) {  // families (2,2,2) and (3,3,3)
    // In the i = j = k case both x and y are excluded from the middle
    // count, hence d/2 - 2 rather than d/2 - 1.
    rows.push_back({c, c, c, 2, 2, {zero, half - 1, zero}});
    rows.push_back({c, c, c, 2, 1, {pl - 1, zero, pl}});
    rows.push_back({c, c, c, 1, 2, {pl - 1, zero, pl}});
    rows.push_back({c, c, c, 2, 3, {mn, zero, mn - 1}});
    rows.push_back({c, c, c, 3, 2, {mn, zero, mn - 1}});
  }
  rows.push_back({2, 2, 3, 2, 2, {zero, half, zero}});
  rows.push_back({2, 2, 3, 2, 1, {qt - 1, zero, qt}});
  rows.push_back({2, 2, 3, 2, 3, {qt, zero, qt - 1}});
  rows.push_back({2, 2, 3, 1, 2, {pl, zero, pl}});
  rows.push_back({2, 2, 3, 3, 2, {mn, zero, mn}});

  auto cross = [&](unsigned i, unsigned j) {
    return cross_angle_set(u, cells[i - 1], cells[j - 1]);
  };

  for (auto& r : rows) {
    auto aij = cross(r.i, r.j), ajk = cross(r.j, r.k), aik = cross(r.i, r.k);
    if (aij.size() != 3 || ajk.size() != 3 || aik.size() != 3)
      return "family (" + std::to_string(r.i) + "," + std::to_string(r.j) + "," +
             std::to_string(r.k) + "): cross-angle set is not 3-valued";
    const QuadNum& alpha = aij[r.a - 1];
    const QuadNum& beta = ajk[r.b - 1];
    for (std::size_t xx : cells[r.i - 1])
      for (std::size_t yy : cells[r.k - 1]) {
        const QuadNum& gamma = u.inner(xx, yy);
        std::size_t m = 0;
        while (m < 3 && aik[m] != gamma) ++m;
        if (m == 3) continue;  // coincident or antipodal pair
        long count = 0;
        for (std::size_t ww : cells[r.j - 1])
          if (u.inner(xx, ww) == alpha && u.inner(ww, yy) == beta) ++count;
        if (QuadNum(count) != r.expect[m])
          return "family (" + std::to_string(r.i) + "," + std::to_string(r.j) +
                 "," + std::to_string(r.k) + ") angles (" + alpha.str() + "," +
                 beta.str() + ") at pair (" + std::to_string(xx) + "," +
                 std::to_string(yy) + "): count " + std::to_string(count) +
                 " expected " + r.expect[m].str();
      }
  }
  return std::nullopt;
}

}  // namespace qreg
