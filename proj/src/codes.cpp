#include "qreg/codes.hpp"

#include <algorithm>
#include <set>

namespace qreg {

BinaryCode extract_code(const MUBSet& m, std::size_t base) {
  if (base >= m.f) throw std::out_of_range("extract_code: basis index");
  if (m.f < 2) throw std::invalid_argument("extract_code: need f >= 2");
  std::size_t d = m.d;
  QuadNum inv_d = QuadNum(1) / QuadNum(static_cast<long>(d));
  BinaryCode c;
  c.length = d;
  for (std::size_t i = 0; i < m.f; ++i) {
    if (i == base) continue;
    for (std::size_t v = 0; v < d; ++v) {
      std::vector<std::uint8_t> word(d), anti(d);
      for (std::size_t j = 0; j < d; ++j) {
        QuadNum g;
        for (std::size_t t = 0; t < d; ++t)
          g += m.bases[i][v][t] * m.bases[base][j][t];
        if (g * g != inv_d)
          throw FrameNotUnbiased("basis " + std::to_string(i) + " vector " +
                                 std::to_string(v) + " coordinate " +
                                 std::to_string(j) + " is " + g.str());
        word[j] = g.sign() > 0 ? 0 : 1;
        anti[j] = word[j] ^ 1;
      }
      c.words.push_back(std::move(word));
      c.words.push_back(std::move(anti));
    }
  }
  std::set<std::vector<std::uint8_t>> distinct(c.words.begin(), c.words.end());
  if (distinct.size() != c.words.size())
    throw std::logic_error("extract_code: duplicate codewords");
  return c;
}

WeightEnumerator weight_enumerator(const BinaryCode& c) {
  WeightEnumerator w;
  w.coeff.assign(c.length + 1, 0);
  for (auto& word : c.words) {
    std::size_t wt = 0;
    for (auto b : word) wt += b;
    w.coeff[wt] += 1;
  }
  return w;
}

std::vector<mpq_class> macwilliams(const WeightEnumerator& w, const mpz_class& size) {
  std::size_t d = w.coeff.size() - 1;
  mpz_class total = 0;
  for (auto& a : w.coeff) total += a;
  if (total != size)
    throw std::invalid_argument("macwilliams: size does not match sum of weights");
  auto binom = [](long n, long r) {
    mpz_class b;
    if (r < 0 || r > n) return b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(r));
    return b;
  };
  std::vector<mpq_class> dual(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    mpz_class s = 0;
    for (std::size_t wt = 0; wt <= d; ++wt) {
      if (w.coeff[wt] == 0) continue;
      mpz_class kraw = 0;  // K_j(wt)
      for (std::size_t i = 0; i <= j; ++i) {
        mpz_class term = binom(static_cast<long>(wt), static_cast<long>(i)) *
                         binom(static_cast<long>(d - wt), static_cast<long>(j - i));
        kraw += (i % 2 == 0) ? term : -term;
      }
      s += w.coeff[wt] * kraw;
    }
    dual[j] = mpq_class(s, size);
    dual[j].canonicalize();
    if (dual[j] < 0)
      throw NegativeDualCoefficient("A'_" + std::to_string(j) + " = " +
                                    dual[j].get_str());
  }
  return dual;
}

unsigned oa_strength(const BinaryCode& c) {
  auto w = weight_enumerator(c);
  auto dual = macwilliams(w, mpz_class(static_cast<unsigned long>(c.words.size())));
  for (std::size_t j = 1; j < dual.size(); ++j)
    if (dual[j] != 0) return static_cast<unsigned>(j - 1);
  return static_cast<unsigned>(c.length);
}

mpz_class joint_quintuple_counts(const MUBSet& m, std::size_t base,
                                 const std::array<std::size_t, 5>& pts,
                                 const std::array<int, 5>& cls) {
  if (m.d <= 4) throw std::invalid_argument("joint_quintuple_counts: need d > 4");
  if (2 * m.f != m.d + 2)
    throw std::invalid_argument("joint_quintuple_counts: need a maximal system");
  if (base >= m.f) throw std::out_of_range("joint_quintuple_counts: basis index");
  for (int a = 0; a < 5; ++a) {
    if (pts[a] >= m.d) throw std::out_of_range("joint_quintuple_counts: point index");
    if (cls[a] != 1 && cls[a] != 3)
      throw std::invalid_argument("joint_quintuple_counts: classes must be 1 or 3");
    for (int b = a + 1; b < 5; ++b)
      if (pts[a] == pts[b])
        throw std::invalid_argument("joint_quintuple_counts: points must be distinct");
  }
  auto code = extract_code(m, base);
  if (oa_strength(code) < 5)
    throw Mismatch("sign-pattern code does not have strength 5");
  // Codewords are exactly the points of X at angle +-1/sqrt d to the
  // chosen fiber; direct counting is a bit test per constraint.
  mpz_class direct = 0;
  for (auto& word : code.words) {
    bool ok = true;
    for (int a = 0; a < 5 && ok; ++a)
      ok = word[pts[a]] == (cls[a] == 3 ? 1 : 0);
    if (ok) direct += 1;
  }
  mpz_class uniform = mpz_class(static_cast<unsigned long>(code.words.size())) / 32;
  if (direct != uniform)
    throw Mismatch("direct count " + direct.get_str() + " != |C|/32 = " +
                   uniform.get_str());
  return direct;
}

}  // namespace qreg
