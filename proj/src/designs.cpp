#include "qreg/designs.hpp"

#include <algorithm>
#include <numeric>

namespace qreg {

SymmetricDesign SymmetricDesign::complement() const {
  SymmetricDesign c;
  c.v = v;
  c.k = static_cast<long>(v) - k;
  c.lambda = static_cast<long>(v) - 2 * k + lambda;
  c.incidence.resize(v * v);
  for (std::size_t i = 0; i < v * v; ++i) c.incidence[i] = incidence[i] ? 0 : 1;
  return c;
}

SymmetricDesign verify_design(std::size_t v, std::vector<std::uint8_t> incidence) {
  if (incidence.size() != v * v)
    throw std::invalid_argument("verify_design: table shape");
  if (v == 0) throw std::invalid_argument("verify_design: empty");
  long k = 0;
  for (std::size_t b = 0; b < v; ++b) k += incidence[b] ? 1 : 0;
  for (std::size_t x = 0; x < v; ++x) {
    long row = 0, col = 0;
    for (std::size_t b = 0; b < v; ++b) {
      row += incidence[x * v + b] ? 1 : 0;
      col += incidence[b * v + x] ? 1 : 0;
    }
    if (row != k)
      throw NotRegular("row " + std::to_string(x) + " has sum " +
                       std::to_string(row) + ", expected " + std::to_string(k));
    if (col != k)
      throw NotRegular("column " + std::to_string(x) + " has sum " +
                       std::to_string(col) + ", expected " + std::to_string(k));
  }
  long lambda = -1;
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = x + 1; y < v; ++y) {
      long meet = 0;
      for (std::size_t b = 0; b < v; ++b)
        meet += (incidence[x * v + b] && incidence[y * v + b]) ? 1 : 0;
      if (lambda < 0)
        lambda = meet;
      else if (meet != lambda)
        throw NotLambdaBalanced("rows " + std::to_string(x) + "," +
                                std::to_string(y) + " meet in " +
                                std::to_string(meet) + " columns, expected " +
                                std::to_string(lambda));
    }
  SymmetricDesign d;
  d.v = v;
  d.k = k;
  d.lambda = std::max(lambda, 0L);
  d.incidence = std::move(incidence);
  return d;
}

LinkedSystem LinkedSystem::verify(
    std::size_t f, std::size_t v,
    std::vector<std::vector<std::vector<std::uint8_t>>> inc) {
  if (f < 2) throw std::invalid_argument("LinkedSystem: f < 2");
  if (inc.size() != f) throw std::invalid_argument("LinkedSystem: fiber count");
  LinkedSystem s;
  s.f_ = f;
  s.v_ = v;
  long k = -1, lambda = -1;
  for (std::size_t i = 0; i < f; ++i) {
    if (inc[i].size() != f) throw std::invalid_argument("LinkedSystem: pair table");
    for (std::size_t j = 0; j < f; ++j) {
      if (i == j) continue;
      auto d = verify_design(v, inc[i][j]);
      if (k < 0) {
        k = d.k;
        lambda = d.lambda;
      } else if (d.k != k || d.lambda != lambda) {
        throw NotLinked("pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has parameters (" + std::to_string(d.k) + "," +
                        std::to_string(d.lambda) + "), expected (" +
                        std::to_string(k) + "," + std::to_string(lambda) + ")");
      }
      for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y)
          if (inc[i][j][x * v + y] != inc[j][i][y * v + x])
            throw NotLinked("I[" + std::to_string(j) + "][" + std::to_string(i) +
                            "] is not the transpose of I[" + std::to_string(i) +
                            "][" + std::to_string(j) + "]");
    }
  }
  s.k_ = k;
  s.lambda_ = lambda;
  s.inc_ = std::move(inc);

  if (f >= 3) {
    long sigma = -1, tau = -1;
    for (std::size_t i = 0; i < f; ++i)
      for (std::size_t j = 0; j < f; ++j) {
        if (i == j) continue;
        for (std::size_t l = 0; l < f; ++l) {
          if (l == i || l == j) continue;
          for (std::size_t x = 0; x < v; ++x)
            for (std::size_t y = 0; y < v; ++y) {
              long c = 0;
              for (std::size_t z = 0; z < v; ++z)
                c += (s.inc_[i][l][x * v + z] && s.inc_[j][l][y * v + z]) ? 1 : 0;
              long& ref = s.inc_[i][j][x * v + y] ? sigma : tau;
              if (ref < 0)
                ref = c;
              else if (ref != c)
                throw NotLinked("triple (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(l) +
                                ") at (x,y)=(" + std::to_string(x) + "," +
                                std::to_string(y) + "): count " +
                                std::to_string(c) + " != " + std::to_string(ref));
            }
        }
      }
    s.st_ = {{sigma, tau}};
    // Closed form: sigma = (k^2 -+ sqrt(n)(v-k))/v, tau = k(k +- sqrt(n))/v.
    long n = k - lambda;
    QuadNum sq = sqrt_int(n);
    if (!sq.is_integer()) throw NonSquareN("n = k - lambda is not a square");
    long sn = static_cast<long>(sq.rat_part().get_num().get_si());
    long vv = static_cast<long>(v);
    for (int sign : {-1, +1}) {
      long num_s = k * k - sign * sn * (vv - k);
      long num_t = k * (k + sign * sn);
      if (num_s % vv == 0 && num_t % vv == 0 && num_s / vv == sigma &&
          num_t / vv == tau) {
        s.branch_ = sign;
        break;
      }
    }
    if (s.branch_ == 0)
      throw NotLinked("(sigma,tau) = (" + std::to_string(sigma) + "," +
                      std::to_string(tau) + ") matches neither closed-form branch");
  }
  return s;
}

LinkedSystem LinkedSystem::restrict_fibers(const std::vector<std::size_t>& keep) const {
  std::vector<std::vector<std::vector<std::uint8_t>>> inc(
      keep.size(), std::vector<std::vector<std::uint8_t>>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (a != b) inc[a][b] = inc_[keep[a]][keep[b]];
  return verify(keep.size(), v_, std::move(inc));
}

LinkedSystem LinkedSystem::complemented() const {
  auto inc = inc_;
  for (std::size_t i = 0; i < f_; ++i)
    for (std::size_t j = 0; j < f_; ++j)
      if (i != j)
        for (auto& b : inc[i][j]) b = b ? 0 : 1;
  return verify(f_, v_, std::move(inc));
}

AssociationScheme lsd_to_scheme(const LinkedSystem& sys) {
  std::size_t f = sys.fibers(), v = sys.fiber_size(), n = f * v;
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t x = 0; x < v; ++x)
      for (std::size_t j = 0; j < f; ++j)
        for (std::size_t y = 0; y < v; ++y) {
          std::size_t a = i * v + x, b = j * v + y;
          if (a == b) continue;
          std::uint8_t c;
          if (i == j)
            c = 2;
          else
            c = sys.incident(i, x, j, y) ? 1 : 3;
          rel[a * n + b] = c;
        }
  return AssociationScheme::from_relations(n, std::move(rel));
}

LinkedSystem scheme_to_lsd(const AssociationScheme& s) {
  if (s.classes() != 3) throw std::invalid_argument("scheme_to_lsd: need 3 classes");
  std::size_t n = s.points();
  // Fibers: classes of R0 u R2, which must be an equivalence relation.
  std::vector<long> fiber(n, -1);
  std::vector<std::vector<std::size_t>> fibers;
  for (std::size_t x = 0; x < n; ++x) {
    if (fiber[x] >= 0) continue;
    long id = static_cast<long>(fibers.size());
    fibers.emplace_back();
    for (std::size_t y = 0; y < n; ++y)
      if (y == x || s.rel(x, y) == 2) {
        if (fiber[y] >= 0) throw NotEquivalence("R0 u R2 is not transitive");
        fiber[y] = id;
        fibers.back().push_back(y);
      }
  }
  // Transitivity: members of one fiber must relate by R0/R2 only.
  for (auto& fb : fibers)
    for (auto x : fb)
      for (auto y : fb)
        if (x != y && s.rel(x, y) != 2)
          throw NotEquivalence("points " + std::to_string(x) + "," +
                               std::to_string(y) + " share a fiber but are not R2");
  std::size_t v = fibers[0].size();
  for (auto& fb : fibers)
    if (fb.size() != v) throw FiberSizeMismatch("unequal fiber sizes");
  std::size_t f = fibers.size();
  if (f < 2) throw NotEquivalence("fewer than 2 fibers");
  std::vector<std::vector<std::vector<std::uint8_t>>> inc(
      f, std::vector<std::vector<std::uint8_t>>(f));
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) {
      if (i == j) continue;
      inc[i][j].assign(v * v, 0);
      for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y)
          inc[i][j][x * v + y] = s.rel(fibers[i][x], fibers[j][y]) == 1 ? 1 : 0;
    }
  return LinkedSystem::verify(f, v, std::move(inc));
}

NodaReport noda_check(const LinkedSystem& sys) {
  NodaReport r;
  long v = static_cast<long>(sys.fiber_size());
  long k = sys.k();
  r.complemented = 2 * k >= v;
  r.k_used = r.complemented ? v - k : k;
  long ku = r.k_used;
  // (v-2) sqrt(k(v-k)) / ((v-2k) sqrt(v-1)), as one rational square root.
  mpq_class sq(mpz_class(v - 2) * (v - 2) * ku * (v - ku),
               mpz_class(v - 2 * ku) * (v - 2 * ku) * (v - 1));
  sq.canonicalize();
  r.rhs = sqrt_rational(sq);
  r.is_equality = (QuadNum(static_cast<long>(sys.fibers()) - 1) == r.rhs);
  return r;
}

AlphaDistribution quad_counting(const LinkedSystem& sys, std::size_t fiber) {
  std::size_t f = sys.fibers(), v = sys.fiber_size();
  if (fiber >= f) throw std::invalid_argument("quad_counting: fiber index");
  AlphaDistribution dist;
  std::vector<std::size_t> s(4);
  for (s[0] = 0; s[0] < v; ++s[0])
    for (s[1] = s[0] + 1; s[1] < v; ++s[1])
      for (s[2] = s[1] + 1; s[2] < v; ++s[2])
        for (s[3] = s[2] + 1; s[3] < v; ++s[3]) {
          long alpha = 0;
          for (std::size_t l = 0; l < f; ++l) {
            if (l == fiber) continue;
            for (std::size_t z = 0; z < v; ++z) {
              bool all = true;
              for (int t = 0; t < 4 && all; ++t)
                all = sys.incident(fiber, s[t], l, z);
              if (all) ++alpha;
            }
          }
          dist.histogram[alpha] += 1;
          dist.sum_alpha += alpha;
          dist.sum_alpha_choose2 += static_cast<long>(alpha) * (alpha - 1) / 2;
        }
  auto binom = [](long n, unsigned long r) {
    mpz_class b;
    if (n < 0) return b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), r);
    return b;
  };
  long k = sys.k(), lam = sys.lambda(), vv = static_cast<long>(v);
  long fl = static_cast<long>(f);
  dist.expected_sum_alpha = (fl - 1) * vv * binom(k, 4);
  if (f >= 3) {
    auto [sigma, tau] = *sys.sigma_tau();
    mpz_class inner = (fl - 2) * k * binom(sigma, 4) + (vv - 1) * binom(lam, 4) +
                      (fl - 2) * (vv - k) * binom(tau, 4);
    dist.expected_sum_choose2 = (fl - 1) * vv * inner / 2;
  } else {
    // f = 2: the (f-2) terms vanish, only the lambda term survives.
    dist.expected_sum_choose2 = vv * (vv - 1) * binom(lam, 4) / 2;
  }
  if (dist.sum_alpha != dist.expected_sum_alpha)
    throw IdentityViolated("sum alpha(S) = " + dist.sum_alpha.get_str() +
                           ", expected " + dist.expected_sum_alpha.get_str());
  if (dist.sum_alpha_choose2 != dist.expected_sum_choose2)
    throw IdentityViolated("sum C(alpha(S),2) = " +
                           dist.sum_alpha_choose2.get_str() + ", expected " +
                           dist.expected_sum_choose2.get_str());
  dist.is_4_design = dist.histogram.size() == 1;
  return dist;
}

QuarticReport quartic_obstruction(long v, long k) {
  QuarticReport r;
  mpz_class V(v), K(k);
  r.value = V * (V + 1) * (V + 1) + 4 * K * K * (V + 3) - 4 * K * V * (V + 3);
  mpz_class rad = V * (V - 1) * (V + 3);
  QuadNum root = rad >= 0 ? sqrt_int(rad) : QuadNum(0);
  r.square_check = rad >= 0 && root.is_integer();
  QuadNum denom(2 * (v + 3));
  QuadNum base(mpq_class(V * (V + 3)));
  r.k_root_plus = (base + root) / denom;
  r.k_root_minus = (base - root) / denom;
  return r;
}

std::vector<long> quartic_square_scan(long lo, long hi) {
  std::vector<long> hits;
  for (long v = lo; v <= hi; ++v) {
    mpz_class rad = mpz_class(v) * (v - 1) * (v + 3);
    if (rad < 0) continue;
    if (mpz_perfect_square_p(rad.get_mpz_t())) hits.push_back(v);
  }
  return hits;
}

}  // namespace qreg
