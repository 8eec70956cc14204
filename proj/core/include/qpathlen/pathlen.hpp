#pragma once

#include <cstdint>
#include <utility>

#include "qpathlen/word.hpp"

namespace qpathlen {

// The parameter rho of a word counts pairs of positions j < k whose window
// minimum min{w_j..w_k} is attained at an endpoint:
//
//   rho = sum over j < k of [L_jk + R_jk - B_jk]
//
// where L_jk (R_jk) holds when the left (right) endpoint attains the window
// minimum and B_jk = L_jk * R_jk. For words with distinct letters rho equals
// the internal path length of the binary search tree built from the word.

// Per-pair indicators. Invariants: both == left && right, neither == !left && !right.
struct PairIndicators {
  bool left = false;
  bool right = false;
  bool both = false;
  bool neither = false;
};

struct RhoBreakdown {
  std::uint64_t rho = 0;
  std::uint64_t left_count = 0;
  std::uint64_t right_count = 0;
  std::uint64_t both_count = 0;
};

// Indicators of the pair (j, k), 1-based with 1 <= j < k <= n.
PairIndicators pair_indicators(const Word& word, std::size_t j, std::size_t k);

// Reference O(n^2) evaluation straight from the definition, with the
// per-indicator counts over all pairs.
RhoBreakdown rho_naive(const Word& word);

// O(n) monotonic-stack evaluation. left/right counts come from the
// next/previous strictly-smaller boundaries, the both count from equal-letter
// runs with no strictly smaller letter in between.
std::uint64_t rho_fast(const Word& word);

// Internal path length (sum of node depths, root at depth 0) of the
// min-rooted Cartesian tree. Requires pairwise-distinct letters; ties have no
// canonical tree here, so duplicates throw std::invalid_argument.
std::uint64_t cartesian_ipl(const Word& word);

// Splits around the leftmost minimum letter: word = prefix . min . suffix.
// Throws std::invalid_argument on the empty word.
std::pair<Word, Word> decompose_at_min(const Word& word);

}  // namespace qpathlen
