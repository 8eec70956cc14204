#include "qpathlen/pathlen.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qpathlen {

PairIndicators pair_indicators(const Word& word, std::size_t j, std::size_t k) {
  const std::size_t n = word.size();
  if (j < 1 || k <= j || k > n)
    throw std::invalid_argument("pair_indicators needs 1 <= j < k <= n");
  Letter window_min = word[j - 1];
  for (std::size_t pos = j; pos < k; ++pos) window_min = std::min(window_min, word[pos]);
  PairIndicators ind;
  ind.left = word[j - 1] == window_min;
  ind.right = word[k - 1] == window_min;
  ind.both = ind.left && ind.right;
  ind.neither = !ind.left && !ind.right;
  return ind;
}

RhoBreakdown rho_naive(const Word& word) {
  const std::size_t n = word.size();
  RhoBreakdown out;
  for (std::size_t j = 0; j < n; ++j) {
    Letter window_min = word[j];
    for (std::size_t k = j + 1; k < n; ++k) {
      window_min = std::min(window_min, word[k]);
      const bool left = word[j] == window_min;
      const bool right = word[k] == window_min;
      out.left_count += left;
      out.right_count += right;
      out.both_count += left && right;
    }
  }
  out.rho = out.left_count + out.right_count - out.both_count;
  return out;
}

std::uint64_t rho_fast(const Word& word) {
  const std::size_t n = word.size();
  std::uint64_t left_count = 0, right_count = 0, both_count = 0;

  std::vector<std::size_t> stack;
  stack.reserve(n);

  // L_jk = 1 exactly for k up to (exclusive) the next strictly smaller letter.
  for (std::size_t j = n; j-- > 0;) {
    while (!stack.empty() && word[stack.back()] >= word[j]) stack.pop_back();
    const std::size_t next_smaller = stack.empty() ? n : stack.back();
    left_count += next_smaller - j - 1;
    stack.push_back(j);
  }

  stack.clear();
  for (std::size_t k = 0; k < n; ++k) {
    while (!stack.empty() && word[stack.back()] >= word[k]) stack.pop_back();
    const std::size_t prev_smaller_plus1 = stack.empty() ? 0 : stack.back() + 1;
    right_count += k - prev_smaller_plus1;
    stack.push_back(k);
  }

  // B pairs: equal letters with no strictly smaller letter in between. Larger
  // letters in between do not block, so runs of one value merge across pops.
  std::vector<std::pair<Letter, std::uint64_t>> runs;
  runs.reserve(n);
  for (Letter v : word) {
    while (!runs.empty() && runs.back().first > v) runs.pop_back();
    if (!runs.empty() && runs.back().first == v) {
      both_count += runs.back().second;
      ++runs.back().second;
    } else {
      runs.emplace_back(v, 1);
    }
  }

  return left_count + right_count - both_count;
}

std::uint64_t cartesian_ipl(const Word& word) {
  const std::size_t n = word.size();
  {
    Word sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("cartesian_ipl requires pairwise-distinct letters");
  }
  if (n == 0) return 0;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> left(n, kNone), right(n, kNone), spine;
  spine.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t last_popped = kNone;
    while (!spine.empty() && word[spine.back()] > word[i]) {
      last_popped = spine.back();
      spine.pop_back();
    }
    left[i] = last_popped;
    if (!spine.empty()) right[spine.back()] = i;
    spine.push_back(i);
  }
  const std::size_t root = spine.front();

  std::uint64_t total_depth = 0;
  std::vector<std::pair<std::size_t, std::uint64_t>> todo{{root, 0}};
  while (!todo.empty()) {
    auto [node, depth] = todo.back();
    todo.pop_back();
    total_depth += depth;
    if (left[node] != kNone) todo.emplace_back(left[node], depth + 1);
    if (right[node] != kNone) todo.emplace_back(right[node], depth + 1);
  }
  return total_depth;
}

std::pair<Word, Word> decompose_at_min(const Word& word) {
  if (word.empty()) throw std::invalid_argument("decompose_at_min needs a nonempty word");
  const auto min_it = std::min_element(word.begin(), word.end());
  return {Word(word.begin(), min_it), Word(min_it + 1, word.end())};
}

}  // namespace qpathlen
