#include "qreg/matrix.hpp"

#include <algorithm>
#include <map>

namespace qreg {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = QuadNum(1);
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
  ExactMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const QuadNum& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::operator*(const QuadNum& s) const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QuadNum ExactMatrix::trace() const {
  QuadNum t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

namespace {

// Row-reduce in place; returns pivot columns.  When det != nullptr the
// matrix is only brought to echelon form and the determinant factor is
// accumulated there.
std::vector<std::size_t> row_reduce(ExactMatrix& m, QuadNum* det = nullptr) {
  std::vector<std::size_t> pivots;
  if (det) *det = QuadNum(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
      if (det) *det = -*det;
    }
    QuadNum pv = m.at(row, col);
    if (det) *det *= pv;
    QuadNum inv = pv.inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    std::size_t start = det ? row + 1 : 0;
    for (std::size_t i = start; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      QuadNum f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    if (!det) {
      for (std::size_t i = 0; i < row; ++i) {
        if (m.at(i, col).is_zero()) continue;
        QuadNum f = m.at(i, col);
        for (std::size_t j = col; j < m.cols(); ++j)
          m.at(i, j) -= f * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QuadNum ExactMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  ExactMatrix m = *this;
  QuadNum det;
  auto pivots = row_reduce(m, &det);
  if (pivots.size() < rows_) return QuadNum(0);
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  ExactMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = QuadNum(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < rows_ || pivots.back() >= cols_)
    throw std::domain_error("inverse: singular matrix");
  ExactMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
  return r;
}

std::vector<std::vector<QuadNum>> ExactMatrix::null_space() const {
  ExactMatrix m = *this;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<QuadNum>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<QuadNum> v(cols_);
    v[free_col] = QuadNum(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QuadNum> ExactMatrix::apply(const std::vector<QuadNum>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: shape");
  std::vector<QuadNum> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<QuadNum> ExactMatrix::char_poly() const {
  if (rows_ != cols_) throw std::invalid_argument("char_poly: not square");
  std::size_t n = rows_;
  std::vector<QuadNum> c(n + 1);
  c[n] = QuadNum(1);
  if (n == 0) return c;
  ExactMatrix N = *this;
  c[n - 1] = -N.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    ExactMatrix M = N;
    QuadNum shift = c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i) M.at(i, i) += shift;
    N = *this * M;
    c[n - k] = -(N.trace() / QuadNum(static_cast<long>(k)));
  }
  return c;
}

std::vector<QuadNum> solve_linear(const ExactMatrix& m, const std::vector<QuadNum>& b) {
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols())
    throw std::domain_error("solve_linear: inconsistent system");
  std::vector<QuadNum> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Polynomial root extraction over Q(sqrt(D)).

namespace {

using Poly = std::vector<QuadNum>;  // low to high

QuadNum poly_eval(const Poly& p, const QuadNum& t) {
  QuadNum r;
  for (std::size_t i = p.size(); i-- > 0;) r = r * t + p[i];
  return r;
}

void poly_trim(Poly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

// Synthetic division by (t - root); caller guarantees root is a root.
void poly_deflate(Poly& p, const QuadNum& root) {
  Poly q(p.size() - 1);
  QuadNum carry = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * root;
  }
  p = std::move(q);
}

bool poly_is_rational(const Poly& p) {
  for (auto& c : p)
    if (!c.is_rational()) return false;
  return true;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class q = 2; q * q <= n && q < 1000000; ++q) {
    if (n % q == 0) {
      int e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      fac.emplace_back(q, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> div{1};
  for (auto& [q, e] : fac) {
    std::size_t base = div.size();
    mpz_class pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= q;
      for (std::size_t j = 0; j < base; ++j) div.push_back(div[j] * pw);
    }
  }
  return div;
}

// Rational root candidates (Gauss) of a rational-coefficient polynomial.
std::vector<mpq_class> rational_root_candidates(const Poly& p) {
  // Clear denominators.
  mpz_class lcm = 1;
  for (auto& c : p) lcm = lcm * c.rat_part().get_den() / gcd(lcm, mpz_class(c.rat_part().get_den()));
  std::vector<mpz_class> ic(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpq_class v = p[i].rat_part() * mpq_class(lcm);
    v.canonicalize();
    ic[i] = v.get_num();
  }
  std::size_t lo = 0;
  while (lo < ic.size() && ic[lo] == 0) ++lo;
  std::vector<mpq_class> cand;
  if (lo > 0) cand.emplace_back(0);
  if (lo >= ic.size() - 1) return cand;
  for (auto& pn : divisors(ic[lo]))
    for (auto& qd : divisors(ic.back())) {
      mpq_class v(pn, qd);
      v.canonicalize();
      cand.push_back(v);
      cand.push_back(-v);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  return cand;
}

void deflate_all(Poly& p, const QuadNum& root, std::vector<QuadNum>& out) {
  while (p.size() > 1 && poly_eval(p, root).is_zero()) {
    poly_deflate(p, root);
    out.push_back(root);
  }
}

// Roots of a monic rational quadratic, through a real square root that may
// introduce a quadratic irrationality.
bool quadratic_roots(const Poly& p, std::vector<QuadNum>& out) {
  QuadNum b = p[1] / p[2], c = p[0] / p[2];
  QuadNum disc = b * b - QuadNum(4) * c;
  if (disc.sign() < 0) return false;
  std::optional<QuadNum> s;
  if (disc.is_rational())
    s = sqrt_rational(disc.rat_part());
  else
    s = disc.sqrt_in_field();
  if (!s) return false;
  QuadNum half = QuadNum::rational(1, 2);
  out.push_back((-b + *s) * half);
  out.push_back((-b - *s) * half);
  return true;
}

// Try to split a monic rational quartic into two rational quadratics via
// the resolvent cubic, then take the roots of each.
bool quartic_roots(const Poly& poly, std::vector<QuadNum>& out) {
  QuadNum p = poly[3], q = poly[2], r = poly[1], s = poly[0];
  Poly resolvent{-(p * p * s - QuadNum(4) * q * s + r * r),
                 p * r - QuadNum(4) * s, -q, QuadNum(1)};
  for (auto& y : rational_root_candidates(resolvent)) {
    if (!poly_eval(resolvent, QuadNum(y)).is_zero()) continue;
    // b + d = y, a + c = p, ac = q - y.
    QuadNum sum_bd(y);
    QuadNum disc = p * p - QuadNum(4) * (q - sum_bd);
    if (disc.sign() < 0 || !disc.is_rational()) continue;
    QuadNum sd = sqrt_rational(disc.rat_part());
    if (!sd.is_rational()) continue;
    QuadNum half = QuadNum::rational(1, 2);
    QuadNum a = (p + sd) * half, c = (p - sd) * half;
    QuadNum b, d;
    if (a != c) {
      b = (r - a * sum_bd) / (c - a);
      d = sum_bd - b;
    } else {
      // a == c: b, d are roots of z^2 - y z + s.
      QuadNum d2 = sum_bd * sum_bd - QuadNum(4) * QuadNum(poly[0]);
      if (d2.sign() < 0 || !d2.is_rational()) continue;
      QuadNum sd2 = sqrt_rational(d2.rat_part());
      if (!sd2.is_rational()) continue;
      b = (sum_bd + sd2) * half;
      d = (sum_bd - sd2) * half;
    }
    if (b * d != QuadNum(poly[0]) || a * d + b * c != r) continue;
    std::vector<QuadNum> rs;
    if (!quadratic_roots(Poly{b, a, QuadNum(1)}, rs)) continue;
    if (!quadratic_roots(Poly{d, c, QuadNum(1)}, rs)) continue;
    for (auto& x : rs) out.push_back(x);
    return true;
  }
  return false;
}

std::vector<QuadNum> roots_rational_poly(Poly p) {
  std::vector<QuadNum> roots;
  poly_trim(p);
  // Rational roots first.
  auto cand = rational_root_candidates(p);
  for (auto& c : cand) deflate_all(p, QuadNum(c), roots);
  // Roots of the form y*sqrt(D): split p(t) = E(t^2) + t*O(t^2); a root
  // y*sqrt(D) forces its square u to be a common rational root of E and O.
  if (p.size() > 3) {
    Poly E, O;
    for (std::size_t i = 0; i < p.size(); ++i)
      (i % 2 == 0 ? E : O).push_back(p[i]);
    poly_trim(E);
    poly_trim(O);
    bool e_zero = E.size() == 1 && E[0].is_zero();
    bool o_zero = O.size() == 1 && O[0].is_zero();
    const Poly& lead = e_zero ? O : E;
    for (auto& u : rational_root_candidates(lead)) {
      if (sgn(u) <= 0) continue;
      if (!e_zero && !poly_eval(E, QuadNum(u)).is_zero()) continue;
      if (!o_zero && !poly_eval(O, QuadNum(u)).is_zero()) continue;
      QuadNum su = sqrt_rational(u);
      if (su.is_rational()) continue;  // would have been a rational root
      deflate_all(p, su, roots);
      deflate_all(p, -su, roots);
    }
  }
  if (p.size() == 3) {
    std::vector<QuadNum> qr;
    if (!quadratic_roots(p, qr)) throw NotSplitOverField("irreducible quadratic factor");
    roots.insert(roots.end(), qr.begin(), qr.end());
    return roots;
  }
  if (p.size() == 5) {
    std::vector<QuadNum> qr;
    if (!quartic_roots(p, qr)) throw NotSplitOverField("irreducible quartic factor");
    roots.insert(roots.end(), qr.begin(), qr.end());
    return roots;
  }
  if (p.size() == 2) roots.push_back(-p[0] / p[1]);
  if (p.size() > 2) throw NotSplitOverField("residual factor of degree " +
                                            std::to_string(p.size() - 1));
  return roots;
}

}  // namespace

std::vector<QuadNum> roots_in_field(std::vector<QuadNum> coeffs) {
  Poly p = std::move(coeffs);
  poly_trim(p);
  if (p.size() <= 1) return {};
  // Monic normalization.
  QuadNum inv = p.back().inverse();
  for (auto& c : p) c *= inv;

  std::vector<QuadNum> roots;
  if (poly_is_rational(p)) {
    roots = roots_rational_poly(std::move(p));
  } else {
    // Candidates come from the rational norm polynomial p * conj(p).
    Poly conj(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) conj[i] = p[i].conjugate();
    Poly norm(2 * p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) norm[i + j] += p[i] * conj[j];
    std::vector<QuadNum> cand = roots_rational_poly(std::move(norm));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (auto& c : cand) deflate_all(p, c, roots);
    if (p.size() > 1) throw NotSplitOverField("roots escape the quadratic field");
  }
  // All irrational roots must live in a single quadratic field.
  unsigned long d = 1;
  for (auto& r : roots) {
    if (r.radicand() == 1) continue;
    if (d == 1) d = r.radicand();
    else if (d != r.radicand())
      throw NotSplitOverField("roots span distinct quadratic fields");
  }
  return roots;
}

std::vector<QuadNum> char_poly_roots(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly_roots: not square");
  if (m.rows() > 8) throw std::invalid_argument("char_poly_roots: dimension > 8");
  return roots_in_field(m.char_poly());
}

}  // namespace qreg
