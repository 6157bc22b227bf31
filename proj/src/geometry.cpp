#include "qreg/geometry.hpp"

#include <algorithm>
#include <map>

namespace qreg {

void GramSet::validate() const {
  if (gram.rows() != size || gram.cols() != size)
    throw std::invalid_argument("GramSet: gram shape mismatch");
  if (ambient_dim == 0) throw std::invalid_argument("GramSet: ambient_dim == 0");
  QuadNum one(1);
  for (std::size_t i = 0; i < size; ++i) {
    if (gram.at(i, i) != one) throw std::invalid_argument("GramSet: diagonal not 1");
    for (std::size_t j = i + 1; j < size; ++j) {
      if (gram.at(i, j) != gram.at(j, i))
        throw std::invalid_argument("GramSet: gram not symmetric");
      QuadNum v = gram.at(i, j);
      if (v > one || v < -one)
        throw std::invalid_argument("GramSet: |inner product| > 1");
    }
  }
}

std::vector<QuadNum> gegenbauer_poly(unsigned k, unsigned m) {
  if (m < 2) throw std::invalid_argument("gegenbauer: m < 2");
  using Poly = std::vector<QuadNum>;
  auto shift_mul_t = [](const Poly& p) {
    Poly r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i];
    return r;
  };
  if (m == 2) {
    // Circle: Q_0 = 1, Q_k = 2 T_k for k >= 1.
    Poly t0{QuadNum(1)}, t1{QuadNum(0), QuadNum(1)};
    if (k == 0) return t0;
    for (unsigned i = 2; i <= k; ++i) {
      Poly nx = shift_mul_t(t1);
      for (auto& c : nx) c *= QuadNum(2);
      for (std::size_t j = 0; j < t0.size(); ++j) nx[j] -= t0[j];
      t0 = std::move(t1);
      t1 = std::move(nx);
    }
    for (auto& c : t1) c *= QuadNum(2);
    return t1;
  }
  // Ultraspherical C_k with lambda = (m-2)/2, then renormalize so that
  // Q_k(1) = dim Harm_k on S^{m-1}.
  QuadNum lam = QuadNum::rational(static_cast<long>(m) - 2, 2);
  Poly c0{QuadNum(1)};
  Poly c1{QuadNum(0), QuadNum(2) * lam};
  Poly ck = (k == 0) ? c0 : c1;
  for (unsigned i = 1; i < k; ++i) {
    // (i+1) C_{i+1} = 2(i+lam) t C_i - (i + 2 lam - 1) C_{i-1}
    Poly nx = shift_mul_t(c1);
    QuadNum f = (QuadNum(static_cast<long>(i)) + lam) * QuadNum(2);
    for (auto& c : nx) c *= f;
    QuadNum g = QuadNum(static_cast<long>(i)) + QuadNum(2) * lam - QuadNum(1);
    for (std::size_t j = 0; j < c0.size(); ++j) nx[j] -= g * c0[j];
    QuadNum inv = QuadNum(static_cast<long>(i) + 1).inverse();
    for (auto& c : nx) c *= inv;
    c0 = std::move(c1);
    c1 = std::move(nx);
    ck = c1;
  }
  // C_k(1) and dim Harm_k.
  QuadNum at_one;
  for (auto& c : ck) at_one += c;
  auto binom = [](long n, long r) -> mpz_class {
    if (r < 0 || r > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(r));
    return b;
  };
  long M = static_cast<long>(m), K = static_cast<long>(k);
  mpz_class harm = binom(M + K - 1, K) - binom(M + K - 3, K - 2);
  QuadNum scale = QuadNum(harm) / at_one;
  for (auto& c : ck) c *= scale;
  return ck;
}

QuadNum gegenbauer(unsigned k, unsigned m, const QuadNum& t) {
  auto p = gegenbauer_poly(k, m);
  QuadNum r;
  for (std::size_t i = p.size(); i-- > 0;) r = r * t + p[i];
  return r;
}

std::vector<QuadNum> angle_set_prime(const GramSet& x) {
  std::map<QuadNum, bool> seen;
  for (std::size_t i = 0; i < x.size; ++i)
    for (std::size_t j = 0; j < x.size; ++j)
      if (i != j) seen[x.gram.at(i, j)] = true;
  std::vector<QuadNum> r;
  for (auto& [v, _] : seen) r.push_back(v);
  std::reverse(r.begin(), r.end());
  return r;
}

std::vector<QuadNum> angle_set(const GramSet& x) {
  std::vector<QuadNum> r;
  for (auto& v : angle_set_prime(x))
    if (v != QuadNum(1) && v != QuadNum(-1)) r.push_back(v);
  return r;
}

std::vector<QuadNum> cross_angle_set(const GramSet& x,
                                     const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b,
                                     bool keep_minus_one) {
  std::map<QuadNum, bool> seen;
  for (auto i : a)
    for (auto j : b) {
      if (i == j) continue;
      const QuadNum& v = x.gram.at(i, j);
      if (v == QuadNum(1)) continue;
      if (!keep_minus_one && v == QuadNum(-1)) continue;
      seen[v] = true;
    }
  std::vector<QuadNum> r;
  for (auto& [v, _] : seen) r.push_back(v);
  std::reverse(r.begin(), r.end());
  return r;
}

unsigned design_strength_subset(const GramSet& x, const std::vector<std::size_t>& rows,
                                unsigned t_max) {
  if (rows.empty()) throw std::invalid_argument("design_strength: empty set");
  // Histogram of inner products over all ordered pairs, diagonal included.
  std::map<QuadNum, mpz_class> hist;
  for (auto i : rows)
    for (auto j : rows) hist[x.gram.at(i, j)] += 1;
  unsigned m = static_cast<unsigned>(x.ambient_dim);
  for (unsigned k = 1; k <= t_max; ++k) {
    QuadNum sum;
    for (auto& [v, c] : hist) sum += QuadNum(c) * gegenbauer(k, m, v);
    if (!sum.is_zero()) return k - 1;
  }
  return t_max;
}

unsigned design_strength(const GramSet& x, unsigned t_max) {
  std::vector<std::size_t> all(x.size);
  for (std::size_t i = 0; i < x.size; ++i) all[i] = i;
  return design_strength_subset(x, all, t_max);
}

GramSet derive_one(const GramSet& x, std::size_t z, const QuadNum& alpha) {
  if (alpha == QuadNum(1) || alpha == QuadNum(-1))
    throw DegenerateAngle("derive_one: alpha = +-1");
  std::vector<std::size_t> fiber;
  for (std::size_t i = 0; i < x.size; ++i)
    if (i != z && x.gram.at(i, z) == alpha) fiber.push_back(i);
  if (fiber.empty()) throw EmptyFiber("derive_one: empty fiber");
  QuadNum a2 = alpha * alpha;
  QuadNum denom = QuadNum(1) - a2;
  GramSet r;
  r.size = fiber.size();
  r.ambient_dim = x.ambient_dim - 1;
  r.gram = ExactMatrix(r.size, r.size);
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    r.labels.push_back(x.labels.empty() ? std::to_string(fiber[i]) : x.labels[fiber[i]]);
    for (std::size_t j = 0; j < fiber.size(); ++j)
      r.gram.at(i, j) = (x.gram.at(fiber[i], fiber[j]) - a2) / denom;
  }
  return r;
}

GramSet derive_two_union(const GramSet& x, std::size_t z1, std::size_t z2,
                         const std::vector<std::pair<QuadNum, QuadNum>>& cells,
                         std::vector<std::size_t>* cell_of) {
  const QuadNum am = x.gram.at(z1, z2);
  if (am == QuadNum(1) || am == QuadNum(-1))
    throw DegenerateAngle("derive_two: <z1,z2> = +-1");
  QuadNum one(1);
  struct Pt {
    std::size_t idx;
    std::size_t cell;
    QuadNum ai, aj, rad;
  };
  std::vector<Pt> pts;
  for (std::size_t p = 0; p < x.size; ++p) {
    if (p == z1 || p == z2) continue;
    QuadNum ai = x.gram.at(p, z1), aj = x.gram.at(p, z2);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (ai != cells[c].first || aj != cells[c].second) continue;
      QuadNum rad = one - ai * ai - aj * aj - am * am + QuadNum(2) * ai * aj * am;
      if (rad.is_zero())
        throw DegeneratePoint("derive_two: point in span(z1,z2)");
      pts.push_back({p, c, ai, aj, rad});
      break;
    }
  }
  if (pts.empty()) throw EmptyFiber("derive_two: empty fiber");
  QuadNum one_minus_am2 = one - am * am;
  GramSet r;
  r.size = pts.size();
  r.ambient_dim = x.ambient_dim - 2;
  r.gram = ExactMatrix(r.size, r.size);
  if (cell_of) cell_of->clear();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    r.labels.push_back(x.labels.empty() ? std::to_string(pts[i].idx)
                                        : x.labels[pts[i].idx]);
    if (cell_of) cell_of->push_back(pts[i].cell);
  }
  try {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      r.gram.at(i, i) = one;
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const Pt& a = pts[i];
        const Pt& b = pts[j];
        QuadNum an = x.gram.at(a.idx, b.idx);
        QuadNum num = (an - a.ai * b.ai) * one_minus_am2 -
                      (a.aj - a.ai * am) * (b.aj - b.ai * am);
        QuadNum prod = a.rad * b.rad;
        std::optional<QuadNum> root;
        if (prod.is_rational())
          root = sqrt_rational(prod.rat_part());
        else
          root = prod.sqrt_in_field();
        if (!root) throw FieldEscape("derive_two: sqrt leaves the field");
        QuadNum v = num / *root;
        r.gram.at(i, j) = v;
        r.gram.at(j, i) = v;
      }
    }
  } catch (const FieldMismatch& e) {
    throw FieldEscape(std::string("derive_two: ") + e.what());
  }
  return r;
}

GramSet derive_two(const GramSet& x, std::size_t z1, std::size_t z2,
                   const QuadNum& alpha_i, const QuadNum& alpha_j) {
  return derive_two_union(x, z1, z2, {{alpha_i, alpha_j}});
}

std::vector<QuadNum> annihilator_expand(const GramSet& x) {
  auto angles = angle_set_prime(x);
  if (angles.size() > 4) throw TooManyAngles("annihilator_expand: |A'| > 4");
  // F(t) = prod (t - a)/(1 - a), monomial coefficients first.
  std::vector<QuadNum> f{QuadNum(1)};
  for (auto& a : angles) {
    std::vector<QuadNum> g(f.size() + 1);
    QuadNum inv = (QuadNum(1) - a).inverse();
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i + 1] += f[i] * inv;
      g[i] -= a * f[i] * inv;
    }
    f = std::move(g);
  }
  // Change of basis into Gegenbauer polynomials, highest degree first.
  unsigned m = static_cast<unsigned>(x.ambient_dim);
  std::size_t s = angles.size();
  std::vector<QuadNum> coeffs(s + 1);
  for (std::size_t k = s + 1; k-- > 0;) {
    auto qk = gegenbauer_poly(static_cast<unsigned>(k), m);
    QuadNum c = f[k] / qk[k];
    coeffs[k] = c;
    for (std::size_t i = 0; i < qk.size(); ++i) f[i] -= c * qk[i];
  }
  return coeffs;
}

}  // namespace qreg
