#pragma once

#include <vector>

#include "qreg/quadnum.hpp"

namespace qreg {

struct NotSplitOverField : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense matrix over Q(sqrt(D)).
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QuadNum& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const QuadNum& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator*(const QuadNum& s) const;
  bool operator==(const ExactMatrix& o) const;

  ExactMatrix transposed() const;
  QuadNum trace() const;
  QuadNum determinant() const;
  ExactMatrix inverse() const;

  /// Basis of the kernel, one column vector per basis element.
  std::vector<std::vector<QuadNum>> null_space() const;

  /// Apply to a column vector.
  std::vector<QuadNum> apply(const std::vector<QuadNum>& v) const;

  /// Characteristic polynomial coefficients c_0..c_n (monic, low to high).
  std::vector<QuadNum> char_poly() const;

 private:
  std::size_t rows_, cols_;
  std::vector<QuadNum> e_;
};

/// All roots in Q(sqrt(D)) of the polynomial with the given coefficients
/// (low to high), with multiplicity.  Throws NotSplitOverField when an
/// irreducible factor of degree >= 2 over the field remains.
std::vector<QuadNum> roots_in_field(std::vector<QuadNum> coeffs);

/// Eigenvalues in Q(sqrt(D)) of a square matrix of dimension <= 8.
std::vector<QuadNum> char_poly_roots(const ExactMatrix& m);

/// Solve M x = b exactly; throws std::domain_error if inconsistent.
std::vector<QuadNum> solve_linear(const ExactMatrix& m, const std::vector<QuadNum>& b);

}  // namespace qreg
