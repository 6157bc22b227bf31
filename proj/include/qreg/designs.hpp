#pragma once

#include <map>
#include <optional>

#include "qreg/scheme.hpp"

namespace qreg {

struct NotRegular : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotLambdaBalanced : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotLinked : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonSquareN : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotEquivalence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FiberSizeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IdentityViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symmetric 2-design given by a square incidence table.
struct SymmetricDesign {
  std::size_t v = 0;
  long k = 0, lambda = 0;
  std::vector<std::uint8_t> incidence;  // v x v

  bool incident(std::size_t x, std::size_t b) const { return incidence[x * v + b]; }
  long n() const { return k - lambda; }
  SymmetricDesign complement() const;
};

/// Verify a square bit table as a symmetric (v,k,lambda) design.
SymmetricDesign verify_design(std::size_t v, std::vector<std::uint8_t> incidence);

/// Linked system of symmetric designs: f fibers of size v with pairwise
/// design incidences and two-valued triple counts (sigma, tau).
class LinkedSystem {
 public:
  /// inc[i][j] is the v x v incidence between fibers i and j (i != j);
  /// inc[j][i] must be its transpose.  Verifies everything.
  static LinkedSystem verify(std::size_t f, std::size_t v,
                             std::vector<std::vector<std::vector<std::uint8_t>>> inc);

  std::size_t fibers() const { return f_; }
  std::size_t fiber_size() const { return v_; }
  long k() const { return k_; }
  long lambda() const { return lambda_; }
  /// (sigma, tau); unset when f = 2 (no triple exists).
  std::optional<std::pair<long, long>> sigma_tau() const { return st_; }
  /// Which sign of the closed form holds: -1 for (k^2 - sqrt(n)(v-k))/v,
  /// +1 for the other branch; 0 when f = 2.
  int sign_branch() const { return branch_; }

  bool incident(std::size_t i, std::size_t x, std::size_t j, std::size_t y) const {
    return inc_[i][j][x * v_ + y] != 0;
  }

  /// The sub-system on a subset of fibers.
  LinkedSystem restrict_fibers(const std::vector<std::size_t>& keep) const;

  /// Complement every pairwise design.
  LinkedSystem complemented() const;

  const std::vector<std::vector<std::vector<std::uint8_t>>>& incidences() const {
    return inc_;
  }

 private:
  LinkedSystem() = default;
  std::size_t f_ = 0, v_ = 0;
  long k_ = 0, lambda_ = 0;
  std::optional<std::pair<long, long>> st_;
  int branch_ = 0;
  std::vector<std::vector<std::vector<std::uint8_t>>> inc_;
};

/// 3-class scheme on f*v points: R1 = incident cross-fiber pairs, R2 =
/// same-fiber pairs, R3 = non-incident cross-fiber pairs.
AssociationScheme lsd_to_scheme(const LinkedSystem& sys);

/// Inverse direction: fibers from the R0 u R2 equivalence classes of a
/// Q-antipodal 3-class scheme, incidence from R1.
LinkedSystem scheme_to_lsd(const AssociationScheme& s);

/// Right-hand side of the fiber-count bound (v-2) sqrt(k(v-k)) /
/// ((v-2k) sqrt(v-1)), and whether f-1 attains it.  Auto-complements to
/// k < v/2 when needed.
struct NodaReport {
  QuadNum rhs;
  bool is_equality = false;
  bool complemented = false;
  long k_used = 0;
};
NodaReport noda_check(const LinkedSystem& sys);

/// Distribution of alpha(S) = |R1(x1) n ... n R1(x4)| over the 4-subsets
/// of one fiber, with both counting identities checked.
struct AlphaDistribution {
  std::map<long, mpz_class> histogram;
  mpz_class sum_alpha = 0;
  mpz_class sum_alpha_choose2 = 0;
  mpz_class expected_sum_alpha = 0;
  mpz_class expected_sum_choose2 = 0;
  bool is_4_design = false;
};
AlphaDistribution quad_counting(const LinkedSystem& sys, std::size_t fiber);

/// The quartic v(v+1)^2 + 4k^2(v+3) - 4kv(v+3), its two k-roots, and
/// whether v(v-1)(v+3) is a perfect square.
struct QuarticReport {
  mpz_class value;
  QuadNum k_root_plus, k_root_minus;
  bool square_check = false;
};
QuarticReport quartic_obstruction(long v, long k);

/// v in [lo, hi] with v(v-1)(v+3) a perfect square.
std::vector<long> quartic_square_scan(long lo, long hi);

}  // namespace qreg
