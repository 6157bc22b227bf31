#include "qreg/quadnum.hpp"

#include <cmath>
#include <sstream>

namespace qreg {

namespace {

bool is_squarefree(const mpz_class& n) {
  if (n <= 0) return false;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

}  // namespace

mpz_class squarefree_part(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("squarefree_part: negative argument");
  if (n == 0) return 1;
  mpz_class m = n, sf = 1;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e % 2 == 1) sf *= p;
    }
  }
  sf *= m;  // leftover cofactor is prime, exponent 1
  return sf;
}

QuadNum::QuadNum(mpq_class a, mpq_class b, unsigned long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0) throw std::invalid_argument("QuadNum: D must be positive");
  if (d_ == 1 && b_ != 0) {
    // sqrt(1) = 1: fold into the rational part.
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) {
    d_ = 1;
  } else if (!is_squarefree(mpz_class(d_))) {
    throw std::invalid_argument("QuadNum: D must be square-free");
  }
}

QuadNum QuadNum::rational(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return QuadNum(q);
}

unsigned long QuadNum::common_radicand(const QuadNum& x, const QuadNum& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.d_ == 1) return y.d_;
  if (y.d_ == 1) return x.d_;
  throw FieldMismatch("QuadNum: mixed radicands " + std::to_string(x.d_) +
                      " and " + std::to_string(y.d_));
}

QuadNum QuadNum::operator-() const { return QuadNum(-a_, -b_, d_); }

QuadNum QuadNum::operator+(const QuadNum& o) const {
  return QuadNum(a_ + o.a_, b_ + o.b_, common_radicand(*this, o));
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
  return QuadNum(a_ - o.a_, b_ - o.b_, common_radicand(*this, o));
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
  unsigned long d = common_radicand(*this, o);
  mpq_class dd(static_cast<long>(d));
  return QuadNum(a_ * o.a_ + b_ * o.b_ * dd, a_ * o.b_ + b_ * o.a_, d);
}

QuadNum QuadNum::inverse() const {
  mpq_class n = norm();
  if (n == 0) throw std::domain_error("QuadNum: division by zero");
  return QuadNum(a_ / n, -b_ / n, d_);
}

QuadNum QuadNum::operator/(const QuadNum& o) const { return *this * o.inverse(); }

QuadNum QuadNum::conjugate() const { return QuadNum(a_, -b_, d_); }

mpq_class QuadNum::norm() const {
  mpq_class r = a_ * a_ - b_ * b_ * mpq_class(static_cast<long>(d_));
  r.canonicalize();
  return r;
}

int QuadNum::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 D.
  int c = sgn(norm());
  return sa * c;
}

bool QuadNum::operator==(const QuadNum& o) const {
  if (a_ != o.a_) return false;
  if (b_ == 0 && o.b_ == 0) return true;
  return b_ == o.b_ && d_ == o.d_;
}

std::optional<QuadNum> QuadNum::sqrt_in_field() const {
  int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return QuadNum(0);
  if (is_rational()) {
    // sqrt(p/q) = sqrt(p q)/q; lies in the field iff the square-free
    // part of p*q is 1 or D.
    mpz_class pq = a_.get_num() * a_.get_den();
    mpz_class sf = squarefree_part(pq);
    mpz_class sq = pq / sf;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    if (root * root != sq) return std::nullopt;  // unreachable, defensive
    mpq_class scale(root, a_.get_den());
    scale.canonicalize();
    if (sf == 1) return QuadNum(scale);
    if (sf == static_cast<long>(d_) || d_ == 1)
      return QuadNum(0, scale, static_cast<unsigned long>(sf.get_ui()));
    return std::nullopt;
  }
  // (x + y sqrt(D))^2 = a + b sqrt(D)  =>  x^2 + y^2 D = a, 2xy = b.
  // Then x^2 is a rational root of  4 z^2 - 4 a z + b^2 D = 0.
  mpq_class D(static_cast<long>(d_));
  mpq_class disc = a_ * a_ - b_ * b_ * D;  // (x^2 - y^2 D)^2
  if (sgn(disc) < 0) return std::nullopt;
  QuadNum sd = sqrt_rational(disc);
  if (!sd.is_rational()) return std::nullopt;
  for (int pm = 0; pm < 2; ++pm) {
    mpq_class x2 = (a_ + (pm ? -1 : 1) * sd.rat_part()) / 2;
    x2.canonicalize();
    if (sgn(x2) < 0) continue;
    QuadNum x = sqrt_rational(x2);
    if (!x.is_rational()) continue;
    if (x.rat_part() == 0) continue;
    mpq_class y = b_ / (2 * x.rat_part());
    y.canonicalize();
    QuadNum cand(x.rat_part(), y, d_);
    if (cand * cand == *this) return cand.sign() >= 0 ? cand : -cand;
  }
  return std::nullopt;
}

double QuadNum::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadNum::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << a_;
  } else {
    os << a_ << " + " << b_ << "*sqrt(" << d_ << ")";
  }
  return os.str();
}

QuadNum sqrt_int(const mpz_class& n) {
  if (n < 0) throw std::domain_error("sqrt_int: negative argument");
  if (n == 0) return QuadNum(0);
  mpz_class sf = squarefree_part(n);
  mpz_class sq = n / sf;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  if (sf == 1) return QuadNum(mpq_class(root));
  if (!sf.fits_ulong_p()) throw std::domain_error("sqrt_int: radicand too large");
  return QuadNum(0, mpq_class(root), sf.get_ui());
}

QuadNum sqrt_rational(const mpq_class& q) {
  if (sgn(q) < 0) throw std::domain_error("sqrt_rational: negative argument");
  if (q == 0) return QuadNum(0);
  QuadNum r = sqrt_int(q.get_num() * q.get_den());
  mpq_class den(q.get_den());
  return QuadNum(r.rat_part() / den, r.irr_part() / den, r.radicand());
}

}  // namespace qreg
