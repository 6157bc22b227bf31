#include "qreg/scheme.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace qreg {

namespace {

inline long popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t words) {
  long c = 0;
  for (std::size_t w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace

AssociationScheme AssociationScheme::from_relations(std::size_t n,
                                                    std::vector<std::uint8_t> rel) {
  if (rel.size() != n * n) throw std::invalid_argument("from_relations: table shape");
  AssociationScheme s;
  s.n_ = n;
  s.rel_ = std::move(rel);
  unsigned d = 0;
  for (auto c : s.rel_) d = std::max<unsigned>(d, c);
  if (d > 6) throw std::invalid_argument("from_relations: more than 6 classes");
  if (d == 0 && n > 1) throw IdentityClassBroken("only the identity class present");
  s.d_ = d;
  for (std::size_t x = 0; x < n; ++x) {
    if (s.rel_[x * n + x] != 0)
      throw IdentityClassBroken("rel(x,x) != 0 at x=" + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && s.rel_[x * n + y] == 0)
        throw IdentityClassBroken("rel(x,y) = 0 off the diagonal at (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
      if (s.rel_[x * n + y] != s.rel_[y * n + x])
        throw NotSymmetric("rel not symmetric at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
    }
  }
  s.words_ = (n + 63) / 64;
  s.bits_.assign(d + 1, std::vector<std::uint64_t>(n * s.words_, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      unsigned c = s.rel_[x * n + y];
      s.bits_[c][x * s.words_ + (y >> 6)] |= std::uint64_t(1) << (y & 63);
    }
  s.compute_parameters();
  s.compute_eigenmatrices();
  return s;
}

void AssociationScheme::compute_parameters() {
  unsigned dd = d_ + 1;
  p_.assign(dd * dd * dd, -1);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      unsigned k = rel_[x * n_ + y];
      for (unsigned i = 0; i < dd; ++i)
        for (unsigned j = 0; j < dd; ++j) {
          long c = popcount_and(row_bits(i, x), row_bits(j, y), words_);
          long& ref = p_[(i * dd + j) * dd + k];
          if (ref < 0)
            ref = c;
          else if (ref != c)
            throw IntersectionNumbersInconsistent(
                "p[" + std::to_string(i) + "][" + std::to_string(j) + "]^" +
                    std::to_string(k) + " differs: " + std::to_string(ref) +
                    " vs " + std::to_string(c) + " at (" + std::to_string(x) +
                    "," + std::to_string(y) + ")",
                x, y, k, ref, c);
        }
    }
  k_.assign(dd, 0);
  for (unsigned i = 0; i < dd; ++i) k_[i] = p(i, i, 0);
  long total = std::accumulate(k_.begin(), k_.end(), 0L);
  if (total != static_cast<long>(n_))
    throw IntersectionNumbersInconsistent("valencies do not sum to n", 0, 0, 0,
                                          total, static_cast<long>(n_));
  // n k_k p_{ij}^k is symmetric in (i,j,k).
  for (unsigned i = 0; i < dd; ++i)
    for (unsigned j = 0; j < dd; ++j)
      for (unsigned k = 0; k < dd; ++k) {
        long t = k_[k] * p(i, j, k);
        if (t != k_[j] * p(k, i, j) || t != k_[i] * p(j, k, i))
          throw IntersectionNumbersInconsistent("triangle count not symmetric",
                                                i, j, k, t, k_[j] * p(k, i, j));
      }
}

void AssociationScheme::compute_eigenmatrices() {
  unsigned dd = d_ + 1;
  // Regular representation L_i of the Bose-Mesner algebra:
  // column j of L_i holds the coefficients of A_i A_j.
  std::vector<ExactMatrix> L(dd, ExactMatrix(dd, dd));
  for (unsigned i = 0; i < dd; ++i)
    for (unsigned k = 0; k < dd; ++k)
      for (unsigned j = 0; j < dd; ++j)
        L[i].at(k, j) = QuadNum(p(i, j, k));

  // Split into common eigenspaces by successive refinement.
  using Space = std::vector<std::vector<QuadNum>>;  // list of basis vectors
  Space whole;
  for (unsigned j = 0; j < dd; ++j) {
    std::vector<QuadNum> e(dd);
    e[j] = QuadNum(1);
    whole.push_back(std::move(e));
  }
  std::vector<Space> spaces{whole};
  for (unsigned i = 1; i < dd; ++i) {
    std::vector<Space> next;
    for (auto& sp : spaces) {
      if (sp.size() == 1) {
        next.push_back(sp);
        continue;
      }
      // Matrix of L_i restricted to the invariant subspace span(sp).
      ExactMatrix V(dd, sp.size());
      for (std::size_t c = 0; c < sp.size(); ++c)
        for (unsigned r = 0; r < dd; ++r) V.at(r, c) = sp[c][r];
      ExactMatrix C(sp.size(), sp.size());
      for (std::size_t c = 0; c < sp.size(); ++c) {
        auto img = L[i].apply(sp[c]);
        auto coeff = solve_linear(V, img);
        for (std::size_t r = 0; r < sp.size(); ++r) C.at(r, c) = coeff[r];
      }
      auto roots = roots_in_field(C.char_poly());
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      for (auto& lam : roots) {
        ExactMatrix Cs = C;
        for (std::size_t r = 0; r < sp.size(); ++r) Cs.at(r, r) -= lam;
        auto ker = Cs.null_space();
        if (ker.empty()) continue;
        Space sub;
        for (auto& kv : ker) {
          std::vector<QuadNum> v(dd);
          for (std::size_t c = 0; c < sp.size(); ++c)
            for (unsigned r = 0; r < dd; ++r) v[r] += kv[c] * sp[c][r];
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != dd)
    throw NotAScheme("algebra does not split into " + std::to_string(dd) +
                     " one-dimensional eigenspaces");

  // Eigenvalue row per common eigenvector.
  std::vector<std::vector<QuadNum>> rows;
  for (auto& sp : spaces) {
    const auto& v = sp[0];
    unsigned r0 = 0;
    while (v[r0].is_zero()) ++r0;
    std::vector<QuadNum> row(dd);
    for (unsigned i = 0; i < dd; ++i) {
      auto img = L[i].apply(v);
      row[i] = img[r0] / v[r0];
    }
    rows.push_back(std::move(row));
  }
  // Perron row (eigenvalues = valencies) first, rest in descending
  // lexicographic order for determinism.
  std::vector<QuadNum> kq(dd);
  for (unsigned i = 0; i < dd; ++i) kq[i] = QuadNum(k_[i]);
  auto perron = std::find(rows.begin(), rows.end(), kq);
  if (perron == rows.end()) throw NotAScheme("missing Perron eigenvalue row");
  std::iter_swap(rows.begin(), perron);
  std::sort(rows.begin() + 1, rows.end(),
            [](const std::vector<QuadNum>& a, const std::vector<QuadNum>& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                int s = (a[i] - b[i]).sign();
                if (s != 0) return s > 0;
              }
              return false;
            });
  P_ = ExactMatrix(dd, dd);
  for (unsigned s = 0; s < dd; ++s)
    for (unsigned i = 0; i < dd; ++i) P_.at(s, i) = rows[s][i];

  // Multiplicities m_s = n / sum_i P[s][i]^2 / k_i.
  m_.assign(dd, 0);
  mpz_class msum = 0;
  for (unsigned s = 0; s < dd; ++s) {
    QuadNum denom;
    for (unsigned i = 0; i < dd; ++i)
      denom += P_.at(s, i) * P_.at(s, i) / kq[i];
    QuadNum ms = QuadNum(static_cast<long>(n_)) / denom;
    if (!ms.is_integer() || ms.sign() <= 0)
      throw NotAScheme("non-integral multiplicity " + ms.str());
    m_[s] = ms.rat_part().get_num();
    msum += m_[s];
  }
  if (msum != static_cast<long>(n_)) throw NotAScheme("multiplicities do not sum to n");

  Q_ = P_.inverse() * QuadNum(static_cast<long>(n_));

  // Krein parameters q_{ij}^k = (1/(n m_k)) sum_l k_l Q[l][i] Q[l][j] Q[l][k].
  q_.assign(dd * dd * dd, QuadNum());
  QuadNum nq(static_cast<long>(n_));
  for (unsigned i = 0; i < dd; ++i)
    for (unsigned j = i; j < dd; ++j)
      for (unsigned k = 0; k < dd; ++k) {
        QuadNum sum;
        for (unsigned l = 0; l < dd; ++l)
          sum += kq[l] * Q_.at(l, i) * Q_.at(l, j) * Q_.at(l, k);
        QuadNum v = sum / (nq * QuadNum(m_[k]));
        if (v.sign() < 0)
          throw NotAScheme("negative Krein parameter q[" + std::to_string(i) +
                           "][" + std::to_string(j) + "]^" + std::to_string(k) +
                           " = " + v.str());
        q_[(i * dd + j) * dd + k] = v;
        q_[(j * dd + i) * dd + k] = v;
      }
}

AssociationScheme AssociationScheme::from_gram(const GramSet& x) {
  x.validate();
  auto angles = angle_set_prime(x);
  for (auto& a : angles)
    if (a == QuadNum(1))
      throw AngleCollision("distinct points with inner product 1");
  std::map<QuadNum, std::uint8_t> cls;
  // alpha_0 = 1 is the identity class; the rest by descending value.
  std::uint8_t next = 1;
  for (auto& a : angles) cls[a] = next++;
  std::vector<std::uint8_t> rel(x.size * x.size, 0);
  for (std::size_t i = 0; i < x.size; ++i)
    for (std::size_t j = 0; j < x.size; ++j)
      if (i != j) rel[i * x.size + j] = cls.at(x.gram.at(i, j));
  return from_relations(x.size, std::move(rel));
}

ExactMatrix AssociationScheme::krein_matrix(unsigned i) const {
  unsigned dd = d_ + 1;
  ExactMatrix b(dd, dd);
  for (unsigned j = 0; j < dd; ++j)
    for (unsigned k = 0; k < dd; ++k) b.at(j, k) = krein(i, j, k);
  return b;
}

ExactMatrix AssociationScheme::intersection_matrix(unsigned i) const {
  unsigned dd = d_ + 1;
  ExactMatrix b(dd, dd);
  for (unsigned j = 0; j < dd; ++j)
    for (unsigned k = 0; k < dd; ++k) b.at(j, k) = QuadNum(p(i, j, k));
  return b;
}

QStructure AssociationScheme::q_structure() const {
  unsigned dd = d_ + 1;
  QStructure qs;
  // Search all orderings of the nontrivial idempotents for a Q-polynomial
  // structure: q_{1,j}^k = 0 when |j-k| > 1 and q_{1,j}^{j+1} != 0.
  std::vector<unsigned> perm(d_);
  std::iota(perm.begin(), perm.end(), 1u);
  std::vector<std::vector<unsigned>> found;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<unsigned> full(dd);
    for (unsigned j = 1; j < dd; ++j) full[j] = perm[j - 1];
    bool ok = true;
    for (unsigned j = 0; j < dd && ok; ++j)
      for (unsigned k = 0; k < dd && ok; ++k) {
        QuadNum v = krein(full[1], full[j], full[k]);
        unsigned diff = j > k ? j - k : k - j;
        if (diff > 1 && !v.is_zero()) ok = false;
      }
    for (unsigned j = 0; j + 1 < dd && ok; ++j)
      if (krein(full[1], full[j], full[j + 1]).is_zero()) ok = false;
    if (ok) found.push_back(full);
  } while (std::next_permutation(perm.begin(), perm.end()));

  qs.is_q_polynomial = !found.empty();
  qs.all_orderings = found;
  if (!found.empty()) {
    // Lexicographically least by (multiplicity, index).
    auto key = [&](const std::vector<unsigned>& f) {
      std::vector<std::pair<mpz_class, unsigned>> k;
      for (unsigned j = 1; j < dd; ++j) k.emplace_back(m_[f[j]], f[j]);
      return k;
    };
    qs.ordering = *std::min_element(found.begin(), found.end(),
                                    [&](const auto& a, const auto& b) {
                                      return key(a) < key(b);
                                    });
  } else {
    qs.ordering.resize(dd);
    std::iota(qs.ordering.begin(), qs.ordering.end(), 0u);
  }
  const auto& f = qs.ordering;
  // Krein array under the chosen ordering.
  for (unsigned j = 0; j < d_; ++j)
    qs.krein_b.push_back(krein(f[1], f[j + 1], f[j]));
  for (unsigned j = 1; j < dd; ++j)
    qs.krein_c.push_back(krein(f[1], f[j - 1], f[j]));
  if (qs.is_q_polynomial) {
    qs.is_q_bipartite = true;
    for (unsigned j = 1; j < dd; ++j)
      if (!krein(f[1], f[j], f[j]).is_zero()) qs.is_q_bipartite = false;
    qs.is_q_antipodal = true;
    for (unsigned j = 0; j < d_; ++j) {
      if (j == d_ / 2) continue;
      // b*_j vs c*_{d-j}; krein_c is indexed from c*_1.
      if (qs.krein_b[j] != qs.krein_c[d_ - j - 1]) qs.is_q_antipodal = false;
    }
  }
  // Imprimitivity system: the coarsest equivalence among R_0 union S.
  std::size_t best = 1;
  for (unsigned mask = 1; mask < (1u << d_); ++mask) {
    if (mask + 1 == (1u << d_)) continue;  // everything: trivial
    // Class sizes of the candidate equivalence, via closure from point 0.
    std::vector<char> in(d_ + 1, 0);
    in[0] = 1;
    for (unsigned i = 1; i <= d_; ++i) in[i] = (mask >> (i - 1)) & 1;
    std::size_t sz = 0;
    for (unsigned i = 0; i <= d_; ++i)
      if (in[i]) sz += k_[i];
    bool ok = true;
    // Transitivity: p_{ij}^k with i,j inside and k outside must vanish.
    for (unsigned i = 0; i <= d_ && ok; ++i)
      for (unsigned j = 0; j <= d_ && ok; ++j)
        for (unsigned k = 0; k <= d_ && ok; ++k)
          if (in[i] && in[j] && !in[k] && p(i, j, k) != 0) ok = false;
    if (ok && sz > best && sz < n_) best = sz;
  }
  if (best > 1) qs.antipodal_class_count = n_ / best;
  return qs;
}

std::vector<std::size_t> AssociationScheme::subconstituent_points(std::size_t z,
                                                                 unsigned j) const {
  std::vector<std::size_t> pts;
  for (std::size_t y = 0; y < n_; ++y)
    if (rel(z, y) == j) pts.push_back(y);
  return pts;
}

AssociationScheme AssociationScheme::subconstituent(std::size_t z, unsigned j) const {
  auto pts = subconstituent_points(z, j);
  if (pts.size() < 2) throw std::invalid_argument("subconstituent: valency < 2");
  // Relabel the classes that actually appear, keeping their order.
  std::vector<int> remap(d_ + 1, -1);
  remap[0] = 0;
  unsigned next = 1;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b) {
      unsigned c = rel(pts[a], pts[b]);
      if (remap[c] < 0) remap[c] = -2;  // mark as present
    }
  for (unsigned c = 1; c <= d_; ++c)
    if (remap[c] == -2) remap[c] = static_cast<int>(next++);
  std::vector<std::uint8_t> sub(pts.size() * pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b)
      sub[a * pts.size() + b] =
          static_cast<std::uint8_t>(remap[rel(pts[a], pts[b])]);
  try {
    return from_relations(pts.size(), std::move(sub));
  } catch (const IntersectionNumbersInconsistent& e) {
    throw NotAScheme(std::string("subconstituent is not a scheme: ") + e.what());
  }
}

unsigned long AssociationScheme::radicand() const {
  for (unsigned s = 0; s <= d_; ++s)
    for (unsigned i = 0; i <= d_; ++i)
      if (P_.at(s, i).radicand() != 1) return P_.at(s, i).radicand();
  return 1;
}

}  // namespace qreg
