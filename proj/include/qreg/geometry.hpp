#pragma once

#include <string>
#include <vector>

#include "qreg/matrix.hpp"

namespace qreg {

struct EmptyFiber : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateAngle : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegeneratePoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldEscape : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooManyAngles : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite point set on S^{ambient_dim - 1}, held through its Gram matrix.
struct GramSet {
  std::size_t size = 0;
  std::size_t ambient_dim = 0;
  ExactMatrix gram;  // size x size, symmetric, unit diagonal
  std::vector<std::string> labels;

  const QuadNum& inner(std::size_t i, std::size_t j) const { return gram.at(i, j); }
  void validate() const;
};

/// Degree-k Gegenbauer polynomial for S^{m-1}, normalized so that
/// Q_0 = 1, Q_1(t) = m t and Q_k(1) = dim Harm_k.
QuadNum gegenbauer(unsigned k, unsigned m, const QuadNum& t);

/// Monomial coefficients (low to high) of the same polynomial.
std::vector<QuadNum> gegenbauer_poly(unsigned k, unsigned m);

/// Distinct off-diagonal Gram values, descending (the angle set A').
std::vector<QuadNum> angle_set_prime(const GramSet& x);

/// A'(X) with +/-1 removed (the degree-defining angle set A).
std::vector<QuadNum> angle_set(const GramSet& x);

/// Distinct inner products between two cells of one GramSet (rows a vs
/// rows b), excluding +/-1 and coincident points.
std::vector<QuadNum> cross_angle_set(const GramSet& x,
                                     const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b,
                                     bool keep_minus_one = false);

/// Largest t <= t_max with vanishing Gegenbauer sums of degrees 1..t.
unsigned design_strength(const GramSet& x, unsigned t_max = 8);

/// Strength of the sub-configuration given by a subset of rows.
unsigned design_strength_subset(const GramSet& x, const std::vector<std::size_t>& rows,
                                unsigned t_max = 8);

/// One-point derived set: the fiber at angle alpha around point z,
/// projected to z-perp and rescaled.
GramSet derive_one(const GramSet& x, std::size_t z, const QuadNum& alpha);

/// Two-point derived set for one (alpha_i, alpha_j) fiber of (z1, z2).
GramSet derive_two(const GramSet& x, std::size_t z1, std::size_t z2,
                   const QuadNum& alpha_i, const QuadNum& alpha_j);

/// Union of several (alpha_i, alpha_j) fibers of (z1, z2), projected
/// together; cell_of[p] records which requested cell each point is in.
GramSet derive_two_union(const GramSet& x, std::size_t z1, std::size_t z2,
                         const std::vector<std::pair<QuadNum, QuadNum>>& cells,
                         std::vector<std::size_t>* cell_of = nullptr);

/// Gegenbauer coefficients f_0..f_s of the annihilator polynomial
/// F(t) = prod_{a in A'(X)} (t - a)/(1 - a).
std::vector<QuadNum> annihilator_expand(const GramSet& x);

}  // namespace qreg
