#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qpathlen/geometric.hpp"
#include "qpathlen/rational.hpp"
#include "qpathlen/word.hpp"

namespace qpathlen {

// Weak-order pattern (rank word): positions mapped onto ranks {1..d} with
// every rank used at least once. All window-minimum indicators are constant
// on a pattern, which turns the infinite sum over words into a finite one.
struct Pattern {
  std::vector<std::uint32_t> ranks;

  std::uint32_t depth() const;
  // m_t = number of positions with rank t, t = 1..d.
  std::vector<std::uint32_t> multiplicities() const;
  // M_r = sum of m_t over t >= r; strictly decreasing, M_1 = n.
  std::vector<std::uint32_t> tail_counts() const;

  Word as_word() const;
  bool operator==(const Pattern&) const = default;
};

// Default enumeration cap; Fubini(7) = 47293 patterns.
inline constexpr std::size_t kDefaultPatternCap = 7;

// Order-isomorphic compression of the word (equal letters get equal ranks).
// Throws std::invalid_argument on the empty word.
Pattern pattern_of(const Word& word);

// All surjective rank words of length n in lexicographic order. Throws
// std::invalid_argument for n = 0 and ResourceLimitError for n > cap.
void for_each_pattern(std::size_t n, const std::function<void(const Pattern&)>& fn,
                      std::size_t cap = kDefaultPatternCap);
std::vector<Pattern> enumerate_patterns(std::size_t n, std::size_t cap = kDefaultPatternCap);

// Ordered Bell numbers via the binomial recurrence (for cross-checks).
std::uint64_t fubini_number(std::size_t n);

// P(pattern) = p^n * q^{sum_t (t-1) m_t} * prod_r 1/(1 - q^{M_r}), obtained by
// telescoping the geometric weights over the gap variables between the d
// distinct letter values. Validated against the truncated sum below.
Rational pattern_probability(const Pattern& pattern, const GeometricModel& model);

struct TruncatedPatternProbability {
  Rational value;       // exact mass of assignments with max letter <= cap
  Rational tail_bound;  // n * q^cap, union bound on the omitted mass
};

// Exact finite sum over all value assignments v_1 < ... < v_d <= cap.
// Requires cap >= depth.
TruncatedPatternProbability pattern_probability_truncated(const Pattern& pattern,
                                                          const GeometricModel& model,
                                                          std::uint32_t cap);

}  // namespace qpathlen
