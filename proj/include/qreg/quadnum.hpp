#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qreg {

struct FieldMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact number a + b*sqrt(D) with a, b rational and D a square-free
/// positive integer.  D == 1 encodes a pure rational (then b == 0).
/// All comparisons are decided exactly, never through floating point.
class QuadNum {
 public:
  QuadNum() : a_(0), b_(0), d_(1) {}
  QuadNum(long v) : a_(v), b_(0), d_(1) {}
  QuadNum(const mpz_class& v) : a_(v), b_(0), d_(1) {}
  QuadNum(const mpq_class& v) : a_(v), b_(0), d_(1) {}
  QuadNum(mpq_class a, mpq_class b, unsigned long d);

  static QuadNum rational(long num, long den);

  const mpq_class& rat_part() const { return a_; }
  const mpq_class& irr_part() const { return b_; }
  unsigned long radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }

  QuadNum operator-() const;
  QuadNum operator+(const QuadNum& o) const;
  QuadNum operator-(const QuadNum& o) const;
  QuadNum operator*(const QuadNum& o) const;
  QuadNum operator/(const QuadNum& o) const;
  QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
  QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
  QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
  QuadNum& operator/=(const QuadNum& o) { return *this = *this / o; }

  QuadNum inverse() const;
  /// Galois conjugate a - b*sqrt(D).
  QuadNum conjugate() const;
  /// a^2 - b^2 D, the field norm (rational).
  mpq_class norm() const;

  /// Exact sign of the real value, in {-1, 0, +1}.
  int sign() const;

  bool operator==(const QuadNum& o) const;
  bool operator!=(const QuadNum& o) const { return !(*this == o); }
  bool operator<(const QuadNum& o) const { return (*this - o).sign() < 0; }
  bool operator>(const QuadNum& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const QuadNum& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const QuadNum& o) const { return (*this - o).sign() >= 0; }

  /// Square root inside the same field, when it exists.
  std::optional<QuadNum> sqrt_in_field() const;

  double to_double() const;
  std::string str() const;

 private:
  // Align the radicands of two operands; promotes pure rationals.
  static unsigned long common_radicand(const QuadNum& x, const QuadNum& y);

  mpq_class a_, b_;
  unsigned long d_;
};

/// Square-free decomposition n = s^2 * D; returns s*sqrt(D) as a QuadNum.
QuadNum sqrt_int(const mpz_class& n);

/// Exact square root of a nonnegative rational, as an element of some
/// quadratic field (D = square-free part of num*den).
QuadNum sqrt_rational(const mpq_class& q);

/// Square-free part of a nonnegative integer.
mpz_class squarefree_part(const mpz_class& n);

}  // namespace qreg
