#include "qreg/regularity.hpp"

#include <algorithm>
#include <cstring>
#include <random>
#include <unordered_map>

namespace qreg {

namespace {

inline long popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t w) {
  long c = 0;
  for (std::size_t i = 0; i < w; ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

inline long popcount_and3(const std::uint64_t* a, const std::uint64_t* b,
                          const std::uint64_t* c, std::size_t w) {
  long r = 0;
  for (std::size_t i = 0; i < w; ++i) r += __builtin_popcountll(a[i] & b[i] & c[i]);
  return r;
}

}  // namespace

RegularityReport triple_regular(const AssociationScheme& s, ScanMode mode,
                                std::uint64_t samples, std::uint64_t seed) {
  const std::size_t n = s.points(), W = s.words();
  const unsigned d = s.classes();
  RegularityReport rep;
  rep.level = 3;
  rep.mode = mode;
  rep.seed = seed;
  if (mode == ScanMode::structured)
    throw std::invalid_argument("triple_regular: structured mode undefined");

  const std::size_t tkeys = (d + 1) * (d + 1) * (d + 1);
  std::vector<std::vector<long>> ref(tkeys);
  std::vector<long> cur(d * d * d);

  auto record_or_compare = [&](std::size_t x, std::size_t y, std::size_t z,
                               unsigned i, unsigned j, unsigned k) -> bool {
    std::size_t t = (i * (d + 1) + j) * (d + 1) + k;
    if (ref[t].empty()) {
      ref[t] = cur;
      return true;
    }
    if (ref[t] == cur) return true;
    RegularityWitness w;
    w.tuple = {x, y, z};
    w.type = {i, j, k};
    w.counts_seen = cur;
    w.counts_ref = ref[t];
    rep.witness = std::move(w);
    return false;
  };

  auto fill_counts = [&](std::size_t x, std::size_t y, std::size_t z,
                         const std::vector<std::uint64_t>& pair_and) {
    for (unsigned a = 1; a <= d; ++a)
      for (unsigned b = 1; b <= d; ++b) {
        const std::uint64_t* ab = pair_and.data() + ((a - 1) * d + (b - 1)) * W;
        for (unsigned c = 1; c <= d; ++c)
          cur[((a - 1) * d + (b - 1)) * d + (c - 1)] =
              popcount_and(ab, s.row_bits(c, z), W);
      }
    (void)x;
    (void)y;
  };

  std::vector<std::uint64_t> pair_and(d * d * W);
  auto build_pair = [&](std::size_t x, std::size_t y) {
    for (unsigned a = 1; a <= d; ++a)
      for (unsigned b = 1; b <= d; ++b) {
        const std::uint64_t* ra = s.row_bits(a, x);
        const std::uint64_t* rb = s.row_bits(b, y);
        std::uint64_t* out = pair_and.data() + ((a - 1) * d + (b - 1)) * W;
        for (std::size_t w = 0; w < W; ++w) out[w] = ra[w] & rb[w];
      }
  };

  if (mode == ScanMode::exhaustive) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        build_pair(x, y);
        unsigned i = s.rel(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          if (z == x || z == y) continue;
          fill_counts(x, y, z, pair_and);
          if (!record_or_compare(x, y, z, i, s.rel(x, z), s.rel(y, z))) {
            rep.verdict = false;
            return rep;
          }
        }
      }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pt(0, n - 1);
    rep.samples = samples;
    for (std::uint64_t it = 0; it < samples; ++it) {
      std::size_t x = pt(rng), y = pt(rng), z = pt(rng);
      if (x == y || x == z || y == z) continue;
      build_pair(x, y);
      fill_counts(x, y, z, pair_and);
      if (!record_or_compare(x, y, z, s.rel(x, y), s.rel(x, z), s.rel(y, z))) {
        rep.verdict = false;
        return rep;
      }
    }
  }
  rep.verdict = true;
  for (unsigned i = 1; i <= d; ++i)
    for (unsigned j = 1; j <= d; ++j)
      for (unsigned k = 1; k <= d; ++k) {
        std::size_t t = (i * (d + 1) + j) * (d + 1) + k;
        if (!ref[t].empty()) rep.tensor[{i, j, k}] = ref[t];
      }
  return rep;
}

namespace {

// Structured quadruple check: coherence of the two-point partition.
bool structured_quadruple(const AssociationScheme& s, std::size_t pairs_per_class,
                          std::uint64_t seed, RegularityReport& rep) {
  const std::size_t n = s.points(), W = s.words();
  const unsigned d = s.classes();
  const std::size_t d2 = d * d;
  std::vector<std::uint64_t> cellmask(d2 * W);
  std::vector<std::uint64_t> tbuf(W);
  std::vector<int> cell_of(n);
  std::vector<long> cur;

  for (unsigned m = 1; m <= d; ++m) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (s.rel(x, y) == m) pairs.emplace_back(x, y);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + m);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    if (pairs.size() > pairs_per_class) pairs.resize(pairs_per_class);

    std::unordered_map<std::size_t, std::vector<long>> ref;
    for (auto [z1, z2] : pairs) {
      std::vector<int> cells;  // nonempty cell ids (i-1)*d + (j-1)
      for (unsigned i = 1; i <= d; ++i)
        for (unsigned j = 1; j <= d; ++j) {
          std::uint64_t* out = cellmask.data() + ((i - 1) * d + (j - 1)) * W;
          const std::uint64_t* a = s.row_bits(i, z1);
          const std::uint64_t* b = s.row_bits(j, z2);
          bool any = false;
          for (std::size_t w = 0; w < W; ++w) {
            out[w] = a[w] & b[w];
            any |= out[w] != 0;
          }
          if (any) cells.push_back(static_cast<int>((i - 1) * d + (j - 1)));
        }
      for (std::size_t u = 0; u < n; ++u)
        cell_of[u] = (u == z1 || u == z2)
                         ? -1
                         : static_cast<int>((s.rel(z1, u) - 1) * d +
                                            (s.rel(z2, u) - 1));
      const std::size_t blk = cells.size() * d2;
      cur.assign(blk, 0);
      for (std::size_t u = 0; u < n; ++u) {
        if (cell_of[u] < 0) continue;
        for (std::size_t v = u + 1; v < n; ++v) {
          if (cell_of[v] < 0) continue;
          for (unsigned a = 1; a <= d; ++a) {
            const std::uint64_t* ra = s.row_bits(a, u);
            for (unsigned b = 1; b <= d; ++b) {
              const std::uint64_t* rb = s.row_bits(b, v);
              for (std::size_t ci = 0; ci < cells.size(); ++ci)
                cur[ci * d2 + (a - 1) * d + (b - 1)] = popcount_and3(
                    ra, rb, cellmask.data() + cells[ci] * W, W);
            }
          }
          std::size_t key = (static_cast<std::size_t>(cell_of[u]) * d2 +
                             static_cast<std::size_t>(cell_of[v])) *
                                (d + 1) +
                            s.rel(u, v);
          auto it = ref.find(key);
          if (it == ref.end()) {
            ref.emplace(key, cur);
          } else if (it->second != cur) {
            RegularityWitness w;
            w.tuple = {z1, z2, u, v};
            w.type = {m, static_cast<unsigned>(cell_of[u]),
                      static_cast<unsigned>(cell_of[v]), s.rel(u, v)};
            w.counts_seen = cur;
            w.counts_ref = it->second;
            rep.witness = std::move(w);
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

RegularityReport quadruple_regular(const AssociationScheme& s, ScanMode mode,
                                   std::uint64_t samples, std::uint64_t seed,
                                   std::size_t pairs_per_class) {
  const std::size_t n = s.points(), W = s.words();
  const unsigned d = s.classes();
  RegularityReport rep;
  rep.level = 4;
  rep.mode = mode;
  rep.seed = seed;

  if (mode == ScanMode::structured) {
    auto r3 = triple_regular(s, ScanMode::exhaustive);
    rep.samples = pairs_per_class;
    if (!r3.verdict) {
      rep.witness = r3.witness;
      rep.verdict = false;
      return rep;
    }
    rep.verdict = structured_quadruple(s, pairs_per_class, seed, rep);
    return rep;
  }

  const std::size_t d4 = static_cast<std::size_t>(d) * d * d * d;
  std::vector<long> cur(d4);
  std::map<std::vector<unsigned>, std::vector<long>> ref;

  auto record_or_compare = [&](const std::array<std::size_t, 4>& t,
                               const std::vector<unsigned>& type) -> bool {
    auto it = ref.find(type);
    if (it == ref.end()) {
      ref.emplace(type, cur);
      return true;
    }
    if (it->second == cur) return true;
    RegularityWitness w;
    w.tuple = {t[0], t[1], t[2], t[3]};
    w.type = type;
    w.counts_seen = cur;
    w.counts_ref = it->second;
    rep.witness = std::move(w);
    return false;
  };

  auto type_of = [&](std::size_t x, std::size_t y, std::size_t z,
                     std::size_t w) -> std::vector<unsigned> {
    return {s.rel(x, y), s.rel(x, z), s.rel(x, w),
            s.rel(y, z), s.rel(y, w), s.rel(z, w)};
  };

  if (mode == ScanMode::exhaustive) {
    if (n > 64)
      throw TooLargeForExhaustive("quadruple exhaustive scan capped at 64 points");
    std::vector<std::uint64_t> c2(d * d * W), c3(d * d * d * W);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        for (unsigned a = 1; a <= d; ++a)
          for (unsigned b = 1; b <= d; ++b) {
            const std::uint64_t* ra = s.row_bits(a, x);
            const std::uint64_t* rb = s.row_bits(b, y);
            std::uint64_t* out = c2.data() + ((a - 1) * d + (b - 1)) * W;
            for (std::size_t w = 0; w < W; ++w) out[w] = ra[w] & rb[w];
          }
        for (std::size_t z = 0; z < n; ++z) {
          if (z == x || z == y) continue;
          for (unsigned a = 1; a <= d; ++a)
            for (unsigned b = 1; b <= d; ++b) {
              const std::uint64_t* ab = c2.data() + ((a - 1) * d + (b - 1)) * W;
              for (unsigned c = 1; c <= d; ++c) {
                const std::uint64_t* rc = s.row_bits(c, z);
                std::uint64_t* out =
                    c3.data() + (((a - 1) * d + (b - 1)) * d + (c - 1)) * W;
                for (std::size_t w = 0; w < W; ++w) out[w] = ab[w] & rc[w];
              }
            }
          for (std::size_t u = 0; u < n; ++u) {
            if (u == x || u == y || u == z) continue;
            for (std::size_t idx = 0; idx < d * d * d; ++idx)
              for (unsigned e = 1; e <= d; ++e)
                cur[idx * d + (e - 1)] =
                    popcount_and(c3.data() + idx * W, s.row_bits(e, u), W);
            if (!record_or_compare({x, y, z, u}, type_of(x, y, z, u))) {
              rep.verdict = false;
              return rep;
            }
          }
        }
      }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pt(0, n - 1);
    rep.samples = samples;
    for (std::uint64_t it = 0; it < samples; ++it) {
      std::array<std::size_t, 4> t{pt(rng), pt(rng), pt(rng), pt(rng)};
      bool distinct = true;
      for (int a = 0; a < 4 && distinct; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (t[a] == t[b]) distinct = false;
      if (!distinct) continue;
      for (unsigned a = 1; a <= d; ++a)
        for (unsigned b = 1; b <= d; ++b)
          for (unsigned c = 1; c <= d; ++c) {
            for (unsigned e = 1; e <= d; ++e) {
              long cnt = 0;
              for (std::size_t w = 0; w < W; ++w)
                cnt += __builtin_popcountll(
                    s.row_bits(a, t[0])[w] & s.row_bits(b, t[1])[w] &
                    s.row_bits(c, t[2])[w] & s.row_bits(e, t[3])[w]);
              cur[(((a - 1) * d + (b - 1)) * d + (c - 1)) * d + (e - 1)] = cnt;
            }
          }
      if (!record_or_compare(t, type_of(t[0], t[1], t[2], t[3]))) {
        rep.verdict = false;
        return rep;
      }
    }
  }
  rep.verdict = true;
  rep.tensor = std::move(ref);
  return rep;
}

CoherentConfiguration verify_cc(std::size_t n, const std::vector<std::size_t>& fiber,
                                const std::vector<std::uint32_t>& rel) {
  if (fiber.size() != n || rel.size() != n * n)
    throw std::invalid_argument("verify_cc: shape");
  std::uint32_t R = 0;
  for (auto r : rel) R = std::max(R, r + 1);
  struct RelInfo {
    bool seen = false;
    std::size_t fx = 0, fy = 0;
    bool diag = false;
    std::uint32_t transpose = 0;
  };
  std::vector<RelInfo> info(R);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::uint32_t r = rel[x * n + y];
      RelInfo& ri = info[r];
      if (!ri.seen) {
        ri.seen = true;
        ri.fx = fiber[x];
        ri.fy = fiber[y];
        ri.diag = x == y;
        ri.transpose = rel[y * n + x];
      } else {
        if (ri.fx != fiber[x] || ri.fy != fiber[y])
          throw NotRefining("relation " + std::to_string(r) +
                            " crosses fiber blocks at (" + std::to_string(x) +
                            "," + std::to_string(y) + ")");
        if (ri.diag != (x == y))
          throw NotRefining("relation " + std::to_string(r) +
                            " mixes diagonal and off-diagonal pairs at (" +
                            std::to_string(x) + "," + std::to_string(y) + ")");
        if (ri.transpose != rel[y * n + x])
          throw NotTransposeClosed("relation " + std::to_string(r) +
                                   " has inconsistent transpose at (" +
                                   std::to_string(x) + "," + std::to_string(y) +
                                   ")");
      }
    }

  CoherentConfiguration cc;
  cc.n = n;
  cc.fiber = fiber;
  cc.rel = rel;
  cc.num_fibers = *std::max_element(fiber.begin(), fiber.end()) + 1;
  cc.num_relations = 0;
  for (auto& ri : info)
    if (ri.seen) ++cc.num_relations;

  std::vector<std::map<std::pair<std::uint32_t, std::uint32_t>, long>> refc(R);
  std::vector<bool> have(R, false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::uint32_t r = rel[x * n + y];
      std::map<std::pair<std::uint32_t, std::uint32_t>, long> counts;
      for (std::size_t z = 0; z < n; ++z)
        ++counts[{rel[x * n + z], rel[z * n + y]}];
      if (!have[r]) {
        refc[r] = std::move(counts);
        have[r] = true;
      } else if (refc[r] != counts) {
        throw NumbersInconsistent("pair (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") of relation " +
                                  std::to_string(r) +
                                  " has counts differing from the reference");
      }
    }
  for (std::uint32_t r = 0; r < R; ++r)
    if (have[r])
      for (auto& [st, c] : refc[r]) cc.tensor[{r, st.first, st.second}] = c;
  return cc;
}

TwoPointPartition two_point_partition(const AssociationScheme& s, std::size_t z1,
                                      std::size_t z2) {
  if (z1 == z2) throw std::invalid_argument("two_point_partition: equal points");
  unsigned d = s.classes();
  TwoPointPartition p;
  std::map<std::pair<unsigned, unsigned>, std::size_t> idx;
  for (std::size_t u = 0; u < s.points(); ++u) {
    if (u == z1 || u == z2) continue;
    unsigned i = s.rel(z1, u), j = s.rel(z2, u);
    (void)d;
    auto key = std::make_pair(i, j);
    auto it = idx.find(key);
    if (it == idx.end()) {
      it = idx.emplace(key, p.keys.size()).first;
      p.keys.push_back(key);
      p.cells.emplace_back();
    }
    p.cells[it->second].push_back(u);
  }
  return p;
}

namespace {

// Angle-keyed relation table: id per (fiber_x, fiber_y, inner product,
// diagonal flag), built lazily.
struct RelationIndex {
  std::map<std::tuple<std::size_t, std::size_t, std::string, bool>, std::uint32_t> ids;
  std::vector<std::tuple<std::size_t, std::size_t, QuadNum, bool>> decode;

  std::uint32_t intern(std::size_t fx, std::size_t fy, const QuadNum& g, bool diag) {
    auto key = std::make_tuple(fx, fy, g.str(), diag);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(decode.size());
    ids.emplace(key, id);
    decode.emplace_back(fx, fy, g, diag);
    return id;
  }
  std::optional<std::uint32_t> lookup(std::size_t fx, std::size_t fy,
                                      const QuadNum& g, bool diag) const {
    auto it = ids.find(std::make_tuple(fx, fy, g.str(), diag));
    if (it == ids.end()) return std::nullopt;
    return it->second;
  }
};

}  // namespace

CoherentConfiguration antipodal_double(const GramSet& plus,
                                       const std::vector<std::size_t>& fiber_of) {
  const std::size_t N = plus.size;
  if (fiber_of.size() != N) throw std::invalid_argument("antipodal_double: shape");
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      if (x != y && plus.inner(x, y) == QuadNum(1))
        throw DichotomyViolated("coincident points " + std::to_string(x) + "," +
                                std::to_string(y));
      if (plus.inner(x, y) == QuadNum(-1))
        throw DichotomyViolated("antipodal pair inside the input at " +
                                std::to_string(x) + "," + std::to_string(y));
    }

  RelationIndex base_idx;
  std::vector<std::uint32_t> base_rel(N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      base_rel[x * N + y] =
          base_idx.intern(fiber_of[x], fiber_of[y], plus.inner(x, y), x == y);
  auto base_cc = verify_cc(N, fiber_of, base_rel);

  // Doubled set: points 0..N-1 with sign +, N..2N-1 with sign -.
  const std::size_t M = 2 * N;
  std::vector<std::size_t> fiber_d(M);
  for (std::size_t u = 0; u < M; ++u)
    fiber_d[u] = fiber_of[u % N] * 2 + (u < N ? 0 : 1);
  RelationIndex didx;
  std::vector<std::uint32_t> rel_d(M * M);
  auto inner_d = [&](std::size_t u, std::size_t v) {
    QuadNum g = plus.inner(u % N, v % N);
    return (u < N) == (v < N) ? g : -g;
  };
  for (std::size_t u = 0; u < M; ++u)
    for (std::size_t v = 0; v < M; ++v)
      rel_d[u * M + v] = didx.intern(fiber_d[u], fiber_d[v], inner_d(u, v), u == v);
  auto dcc = verify_cc(M, fiber_d, rel_d);

  // Every doubled parameter must equal the sign-adjusted base parameter.
  auto to_base = [&](std::uint32_t r) -> std::optional<std::uint32_t> {
    auto [fu, fv, g, diag] = didx.decode[r];
    std::size_t fx = fu / 2, fy = fv / 2;
    int sign = ((fu % 2) == (fv % 2)) ? 1 : -1;
    QuadNum gb = sign > 0 ? g : -g;
    if (diag) return base_idx.lookup(fx, fy, QuadNum(1), true);
    if (fx == fy && gb == QuadNum(1))  // antipodal copy of one base point
      return base_idx.lookup(fx, fy, QuadNum(1), true);
    return base_idx.lookup(fx, fy, gb, false);
  };
  for (auto& [key, cnt] : dcc.tensor) {
    auto br = to_base(key[0]), bs = to_base(key[1]), bt = to_base(key[2]);
    long expect = 0;
    if (br && bs && bt) {
      auto it = base_cc.tensor.find({*br, *bs, *bt});
      if (it != base_cc.tensor.end()) expect = it->second;
    }
    if (cnt != expect)
      throw DerivationMismatch(
          "doubled parameter " + std::to_string(cnt) +
          " differs from the base-derived value " + std::to_string(expect));
  }
  return dcc;
}

std::optional<long> constant_intersection(const GramSet& x,
                                          const std::vector<std::size_t>& xi,
                                          const std::vector<std::size_t>& xj,
                                          const std::vector<std::size_t>& xk,
                                          const QuadNum& alpha, const QuadNum& beta,
                                          const QuadNum& gamma) {
  std::optional<long> val;
  for (auto a : xi)
    for (auto b : xk) {
      if (x.inner(a, b) != gamma) continue;
      long c = 0;
      for (auto z : xj)
        if (x.inner(a, z) == alpha && x.inner(z, b) == beta) ++c;
      if (!val)
        val = c;
      else if (*val != c)
        return std::nullopt;
    }
  return val;
}

ConditionReport condition_ladder(
    const GramSet& x, const std::vector<std::vector<std::size_t>>& family,
    unsigned t_max) {
  const std::size_t nf = family.size();
  // Dichotomies: equal or disjoint, antipodal-equal or antipodal-disjoint.
  std::vector<std::vector<std::size_t>> sorted = family;
  for (auto& f : sorted) std::sort(f.begin(), f.end());
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = i + 1; j < nf; ++j) {
      if (sorted[i] == sorted[j]) continue;
      std::vector<std::size_t> meet;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                            sorted[j].end(), std::back_inserter(meet));
      if (!meet.empty())
        throw DichotomyViolated("members " + std::to_string(i) + " and " +
                                std::to_string(j) +
                                " overlap without being equal");
    }
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < nf; ++j) {
      // X_i n (-X_j): a in X_i with an antipode in X_j.
      std::size_t hits = 0;
      for (auto a : family[i])
        for (auto b : family[j])
          if (x.inner(a, b) == QuadNum(-1)) {
            ++hits;
            break;
          }
      if (hits != 0 &&
          !(hits == family[i].size() && family[i].size() == family[j].size()))
        throw DichotomyViolated("members " + std::to_string(i) + " and " +
                                std::to_string(j) +
                                " are partially antipodal");
    }

  ConditionReport rep;
  rep.s.assign(nf, std::vector<unsigned>(nf, 0));
  std::vector<std::vector<std::vector<QuadNum>>> angles(
      nf, std::vector<std::vector<QuadNum>>(nf));
  for (std::size_t i = 0; i < nf; ++i) {
    rep.t.push_back(design_strength_subset(x, family[i], t_max));
    for (std::size_t j = 0; j < nf; ++j) {
      angles[i][j] = cross_angle_set(x, family[i], family[j], false);
      rep.s[i][j] = static_cast<unsigned>(angles[i][j].size());
    }
  }

  rep.condition.assign(
      nf, std::vector<std::vector<int>>(nf, std::vector<int>(nf, 0)));
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < nf; ++j)
      for (std::size_t k = 0; k < nf; ++k) {
        long gap = static_cast<long>(rep.s[i][j]) + rep.s[j][k] - rep.t[j];
        if (gap <= 2) {
          rep.condition[i][j][k] = 1;
          continue;
        }
        auto per_gamma_2 = [&](const QuadNum& gamma) {
          for (auto& a : angles[i][j])
            for (auto& b : angles[j][k])
              if (constant_intersection(x, family[i], family[j], family[k], a, b,
                                        gamma))
                return true;
          return false;
        };
        auto per_gamma_3 = [&](const QuadNum& gamma) {
          auto& aij = angles[i][j];
          auto& bjk = angles[j][k];
          for (std::size_t a1 = 0; a1 < aij.size(); ++a1)
            for (std::size_t a2 = 0; a2 < aij.size(); ++a2) {
              if (a1 == a2) continue;
              for (std::size_t b1 = 0; b1 < bjk.size(); ++b1)
                for (std::size_t b2 = 0; b2 < bjk.size(); ++b2) {
                  if (b1 == b2) continue;
                  if (constant_intersection(x, family[i], family[j], family[k],
                                            aij[a1], bjk[b1], gamma) &&
                      constant_intersection(x, family[i], family[j], family[k],
                                            aij[a1], bjk[b2], gamma) &&
                      constant_intersection(x, family[i], family[j], family[k],
                                            aij[a2], bjk[b1], gamma))
                    return true;
                }
            }
          return false;
        };
        if (gap == 3 || gap == 4) {
          bool ok = true;
          for (auto& gamma : angles[i][k])
            if (!(gap == 3 ? per_gamma_2(gamma) : per_gamma_3(gamma))) {
              ok = false;
              break;
            }
          if (ok) rep.condition[i][j][k] = gap - 1;
        }
      }
  return rep;
}

}  // namespace qreg
