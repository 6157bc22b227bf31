#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qreg/geometry.hpp"
#include "qreg/matrix.hpp"

namespace qreg {

struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IdentityClassBroken : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IntersectionNumbersInconsistent : std::runtime_error {
  IntersectionNumbersInconsistent(const std::string& msg, std::size_t x,
                                  std::size_t y, unsigned k, long c1, long c2)
      : std::runtime_error(msg), x(x), y(y), k(k), count_a(c1), count_b(c2) {}
  std::size_t x, y;
  unsigned k;
  long count_a, count_b;
};
struct AngleCollision : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAScheme : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Krein-side structure flags of a scheme.
struct QStructure {
  bool is_q_polynomial = false;
  std::vector<unsigned> ordering;               // idempotent ordering used
  std::vector<std::vector<unsigned>> all_orderings;
  bool is_q_bipartite = false;
  bool is_q_antipodal = false;
  std::size_t antipodal_class_count = 1;        // w
  std::vector<QuadNum> krein_b;                 // b*_0 .. b*_{d-1}
  std::vector<QuadNum> krein_c;                 // c*_1 .. c*_d
};

/// Symmetric association scheme with all parameter tensors populated and
/// verified at construction.
class AssociationScheme {
 public:
  /// Builds and verifies a scheme from an n x n class table.
  static AssociationScheme from_relations(std::size_t n, std::vector<std::uint8_t> rel);

  /// Scheme whose classes are the angle classes of a GramSet, ordered by
  /// descending angle (alpha_0 = 1 first).
  static AssociationScheme from_gram(const GramSet& x);

  std::size_t points() const { return n_; }
  unsigned classes() const { return d_; }
  std::uint8_t rel(std::size_t x, std::size_t y) const { return rel_[x * n_ + y]; }
  const std::vector<std::uint8_t>& rel_table() const { return rel_; }

  long p(unsigned i, unsigned j, unsigned k) const {
    return p_[(i * (d_ + 1) + j) * (d_ + 1) + k];
  }
  long valency(unsigned i) const { return k_[i]; }
  const std::vector<long>& valencies() const { return k_; }
  const std::vector<mpz_class>& multiplicities() const { return m_; }
  const ExactMatrix& P() const { return P_; }
  const ExactMatrix& Q() const { return Q_; }
  QuadNum krein(unsigned i, unsigned j, unsigned k) const {
    return q_[(i * (d_ + 1) + j) * (d_ + 1) + k];
  }
  /// a_1^* = q_{1,1}^1 in the stored idempotent ordering.
  QuadNum a1_star() const { return krein(1, 1, 1); }
  /// Krein matrix view B_i^*: entry (j,k) = q_{i,j}^k.
  ExactMatrix krein_matrix(unsigned i) const;
  /// Intersection matrix B_i: entry (j,k) = p_{i,j}^k.
  ExactMatrix intersection_matrix(unsigned i) const;

  QStructure q_structure() const;

  /// Restriction of the relations to R_j(z); throws NotAScheme when the
  /// restriction fails the axioms.
  AssociationScheme subconstituent(std::size_t z, unsigned j) const;
  /// Point list of R_j(z) in the parent's numbering.
  std::vector<std::size_t> subconstituent_points(std::size_t z, unsigned j) const;

  // Bit-packed relation rows, for counting kernels.
  std::size_t words() const { return words_; }
  const std::uint64_t* row_bits(unsigned i, std::size_t x) const {
    return bits_[i].data() + x * words_;
  }

  // Gram radicand context (square-free D shared by P, Q, q).
  unsigned long radicand() const;

 private:
  AssociationScheme() = default;
  void compute_parameters();
  void compute_eigenmatrices();

  std::size_t n_ = 0;
  unsigned d_ = 0;
  std::vector<std::uint8_t> rel_;
  std::vector<long> p_;
  std::vector<long> k_;
  std::vector<mpz_class> m_;
  ExactMatrix P_, Q_;
  std::vector<QuadNum> q_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> bits_;  // per class
};

}  // namespace qreg
