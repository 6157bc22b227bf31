#pragma once

#include <map>
#include <optional>

#include "qreg/scheme.hpp"

namespace qreg {

struct TooLargeForExhaustive : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotRefining : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTransposeClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumbersInconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DichotomyViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DerivationMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScanMode { exhaustive, sampled, structured };

/// Counterexample to a regularity claim: a point tuple whose counts
/// disagree with the first tuple of the same type.
struct RegularityWitness {
  std::vector<std::size_t> tuple;
  std::vector<unsigned> type;
  std::vector<long> counts_seen;
  std::vector<long> counts_ref;
};

struct RegularityReport {
  int level = 3;  // 3 = triple, 4 = quadruple
  bool verdict = false;
  ScanMode mode = ScanMode::exhaustive;
  std::uint64_t samples = 0;  // samples drawn (sampled) or pairs per class (structured)
  std::uint64_t seed = 0;
  std::optional<RegularityWitness> witness;
  // Per-type count vectors; flattened over (l, m, n, ...) in 1..d.
  std::map<std::vector<unsigned>, std::vector<long>> tensor;
};

/// Triple regularity: counts |R_l(x) n R_m(y) n R_n(z)| depend only on
/// the class type of (x, y, z).  Exhaustive mode scans every ordered
/// triple; sampled mode checks `samples` random triples against
/// first-seen references.
RegularityReport triple_regular(const AssociationScheme& s,
                                ScanMode mode = ScanMode::exhaustive,
                                std::uint64_t samples = 1000000,
                                std::uint64_t seed = 1);

/// Quadruple regularity.  Exhaustive mode (n <= 64) scans ordered
/// 4-tuples; sampled mode draws random 4-tuples; structured mode runs
/// the exhaustive triple scan plus, for sampled pairs (z1,z2) in each
/// class, verifies that the two-point partition cells carry a coherent
/// configuration whose parameters depend only on the class.
RegularityReport quadruple_regular(const AssociationScheme& s,
                                   ScanMode mode = ScanMode::exhaustive,
                                   std::uint64_t samples = 1000000,
                                   std::uint64_t seed = 1,
                                   std::size_t pairs_per_class = 200);

/// Verified coherent configuration on explicit point data.
struct CoherentConfiguration {
  std::size_t n = 0;
  std::size_t num_fibers = 0;
  std::size_t num_relations = 0;
  std::vector<std::size_t> fiber;    // per point
  std::vector<std::uint32_t> rel;    // n x n relation ids
  // p^{r}_{s,t} = |{z : (x,z) in R_s, (z,y) in R_t}| for (x,y) in R_r.
  std::map<std::array<std::uint32_t, 3>, long> tensor;
};

/// Checks the coherent-configuration axioms: relations refine the fiber
/// product, the diagonal is a union of relations, transpose closure,
/// and well-defined intersection numbers.
CoherentConfiguration verify_cc(std::size_t n, const std::vector<std::size_t>& fiber,
                                const std::vector<std::uint32_t>& rel);

/// Cells R_{i,j}(z1, z2) = R_i(z1) n R_j(z2) over i, j >= 1, with the
/// census keyed by (i, j); empty cells omitted.
struct TwoPointPartition {
  std::vector<std::pair<unsigned, unsigned>> keys;
  std::vector<std::vector<std::size_t>> cells;
};
TwoPointPartition two_point_partition(const AssociationScheme& s, std::size_t z1,
                                      std::size_t z2);

/// Doubles an angle-defined coherent configuration on fibers of `plus`
/// by adjoining the antipode of every point.  Verifies that the doubled
/// family is again a CC and that its parameters are exactly the
/// sign-adjusted parameters of the input.
CoherentConfiguration antipodal_double(const GramSet& plus,
                                       const std::vector<std::size_t>& fiber_of);

/// Condition ladder for a family of spherical designs X_i given as row
/// subsets of one GramSet.  condition[i][j][k] in {1,2,3} is the first
/// condition satisfied, 0 if none:
///   (1) s_ij + s_jk - 2 <= t_j
///   (2) s_ij + s_jk - 3  = t_j and some p_{a,b}^j is (x,y)-independent
///       for every cross angle of (X_i, X_k)
///   (3) s_ij + s_jk - 4  = t_j with the three-count variant.
struct ConditionReport {
  std::vector<std::vector<unsigned>> s;  // |A(X_i, X_j)|
  std::vector<unsigned> t;               // design strengths
  std::vector<std::vector<std::vector<int>>> condition;
};
ConditionReport condition_ladder(const GramSet& x,
                                     const std::vector<std::vector<std::size_t>>& family,
                                     unsigned t_max = 8);

/// |{z in X_j : <x,z> = alpha, <z,y> = beta}| when it is the same for
/// every (x,y) in X_i x X_k with <x,y> = gamma; nullopt otherwise.
std::optional<long> constant_intersection(const GramSet& x,
                                          const std::vector<std::size_t>& xi,
                                          const std::vector<std::size_t>& xj,
                                          const std::vector<std::size_t>& xk,
                                          const QuadNum& alpha, const QuadNum& beta,
                                          const QuadNum& gamma);

}  // namespace qreg
