#pragma once

#include <optional>

#include "qreg/scheme.hpp"

namespace qreg {

struct NotOrthonormal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotUnbiased : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PartitionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptySelection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIdempotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrongAngles : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Verified collection of real mutually unbiased bases of R^d.
struct MUBSet {
  std::size_t d = 0;
  std::size_t f = 0;
  unsigned long D = 1;  // square-free part of d
  // bases[i][v] is the v-th unit vector of basis i, d coordinates.
  std::vector<std::vector<std::vector<QuadNum>>> bases;
};

/// Checks orthonormality of each basis, cross-basis inner products
/// +-1/sqrt(d), and the bound f <= d/2 + 1.
MUBSet verify_mub(std::vector<std::vector<std::vector<QuadNum>>> bases);

/// Maximal real MUB in dimension 4 (f = 3): standard basis plus the
/// lexicographically first pair of unbiased +-1/2 bases.
MUBSet construct_d4();

/// Maximal real MUB in dimension 16 (f = 9): standard basis plus eight
/// bases carved out of the 256 Nordstrom-Robinson codewords.
MUBSet construct_d16();

/// Restriction to a subset of bases.
MUBSet sub_mub(const MUBSet& m, const std::vector<std::size_t>& indices);

/// Gram matrix of X = M u (-M): 2df points, vectors of M first.
GramSet mub_gram(const MUBSet& m);

/// The 4-class scheme on X = M u (-M), classes ordered by descending
/// inner product 1, 1/sqrt(d), 0, -1/sqrt(d), -1.
AssociationScheme mub_to_scheme(const MUBSet& m);

/// Gram matrix of the embedding into the first eigenspace of a 4-class
/// Q-bipartite, Q-antipodal scheme: G(x,y) = Q[rel(x,y)][1] / Q[0][1].
/// Verifies exact idempotency of (m_1/n) G and the MUB angle pattern.
GramSet gram_from_idempotent(const AssociationScheme& s);

/// Closed-form parameters of the 3-class scheme carried by a subset of
/// vectors at angle +-1/sqrt(d) to one point of X, for a system of f
/// bases in dimension d: intersection matrices B1, B2, B3 (entry (j,k)
/// = p_{i,j}^k), second eigenmatrix Q, and Krein matrix B1*.
struct DerivedClosedForms {
  ExactMatrix B1, B2, B3, Q, B1star;
};
DerivedClosedForms derived_closed_forms(std::size_t d, std::size_t f);

/// Two-point derived cells of X = M u (-M) around a pair z1, z2 at the
/// middle angle 0, renumbered X1 = cell (0,0), X2 = cell (g,g),
/// X3 = cell (g,-g) with g = 1/sqrt(d).  For the families (i,j,k) in
/// {(2,2,2), (3,3,3), (2,2,3)} and every (x,y) in Xi x Xk, checks
/// |{w in Xj : <x,w> = alpha, <w,y> = beta}| against its closed form in
/// d, which depends only on the position of <x,y> in the descending
/// cross-angle set of (Xi, Xk).  Returns a description of the first
/// mismatch, or nullopt when every count agrees.
std::optional<std::string> check_intersection_table(const GramSet& x, std::size_t z1,
                                                    std::size_t z2, std::size_t d);

}  // namespace qreg
