#pragma once

#include <array>

#include "qreg/mub.hpp"

namespace qreg {

struct FrameNotUnbiased : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeDualCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Set of distinct binary words of one common length.
struct BinaryCode {
  std::size_t length = 0;
  std::vector<std::vector<std::uint8_t>> words;
};

/// Weight distribution A_0 .. A_length.
struct WeightEnumerator {
  std::vector<mpz_class> coeff;
};

/// Sign-pattern code of a MUB in the frame of one chosen basis: the
/// vectors of every other basis and their negatives, one bit per
/// coordinate (0 for +1/sqrt d, 1 for -1/sqrt d); 2d(f-1) words.
BinaryCode extract_code(const MUBSet& m, std::size_t base);

WeightEnumerator weight_enumerator(const BinaryCode& c);

/// Dual weight distribution via the Krawtchouk transform
/// A'_j = (1/size) sum_w A_w K_j(w); exact rationals (the code need not
/// be linear).
std::vector<mpq_class> macwilliams(const WeightEnumerator& w, const mpz_class& size);

/// Orthogonal-array strength: (smallest j >= 1 with A'_j != 0) - 1, or
/// the code length when the dual distribution is trivial.
unsigned oa_strength(const BinaryCode& c);

/// |R_{i1}(x1) n ... n R_{i5}(x5)| for five pairwise-orthogonal points
/// x_m = vectors pts[m] of one basis, classes cls[m] in {1, 3} (angle
/// +1/sqrt d resp. -1/sqrt d).  Computed both by direct counting over
/// M u (-M) and from strength-5 uniformity; requires d > 4, maximal f.
mpz_class joint_quintuple_counts(const MUBSet& m, std::size_t base,
                                 const std::array<std::size_t, 5>& pts,
                                 const std::array<int, 5>& cls);

}  // namespace qreg
