#include "qpathlen/pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpathlen/errors.hpp"

namespace qpathlen {

std::uint32_t Pattern::depth() const {
  return ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
}

std::vector<std::uint32_t> Pattern::multiplicities() const {
  std::vector<std::uint32_t> m(depth(), 0);
  for (auto r : ranks) ++m[r - 1];
  return m;
}

std::vector<std::uint32_t> Pattern::tail_counts() const {
  auto m = multiplicities();
  std::vector<std::uint32_t> tails(m.size(), 0);
  std::uint32_t acc = 0;
  for (std::size_t r = m.size(); r-- > 0;) {
    acc += m[r];
    tails[r] = acc;
  }
  return tails;
}

Word Pattern::as_word() const {
  return Word(ranks.begin(), ranks.end());
}

Pattern pattern_of(const Word& word) {
  if (word.empty()) throw std::invalid_argument("pattern_of needs a nonempty word");
  Word sorted = word;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Pattern pat;
  pat.ranks.reserve(word.size());
  for (Letter v : word) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    pat.ranks.push_back(static_cast<std::uint32_t>(it - sorted.begin()) + 1);
  }
  return pat;
}

void for_each_pattern(std::size_t n, const std::function<void(const Pattern&)>& fn,
                      std::size_t cap) {
  if (n < 1) throw std::invalid_argument("pattern enumeration needs n >= 1");
  if (n > cap)
    throw ResourceLimitError("pattern enumeration capped at n = " + std::to_string(cap));

  Pattern pat;
  pat.ranks.assign(n, 0);
  std::vector<std::uint32_t> count(n + 1, 0);
  std::uint32_t max_rank = 0;
  // Ranks 1..max_rank that are still unused; a leaf is reached only with
  // missing == 0, so every emitted word is surjective.
  std::uint32_t missing = 0;

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      fn(pat);
      return;
    }
    const std::uint32_t remaining_after = static_cast<std::uint32_t>(n - pos - 1);
    const std::uint32_t v_max =
        std::min<std::uint32_t>(static_cast<std::uint32_t>(n),
                                max_rank + 1 + remaining_after - missing);
    for (std::uint32_t v = 1; v <= v_max; ++v) {
      const std::uint32_t old_max = max_rank;
      const std::uint32_t old_missing = missing;
      if (v > max_rank) {
        missing += v - max_rank - 1;
        max_rank = v;
      } else if (count[v] == 0) {
        --missing;
      }
      if (missing <= remaining_after) {
        ++count[v];
        pat.ranks[pos] = v;
        self(self, pos + 1);
        --count[v];
      }
      max_rank = old_max;
      missing = old_missing;
    }
  };
  rec(rec, 0);
}

std::vector<Pattern> enumerate_patterns(std::size_t n, std::size_t cap) {
  std::vector<Pattern> out;
  if (n <= kDefaultPatternCap + 8) out.reserve(fubini_number(std::min<std::size_t>(n, 10)));
  for_each_pattern(n, [&](const Pattern& p) { out.push_back(p); }, cap);
  return out;
}

std::uint64_t fubini_number(std::size_t n) {
  // a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1. Overflows past n = 15.
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  std::vector<std::vector<std::uint64_t>> choose(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    choose[i][0] = 1;
    for (std::size_t k = 1; k <= i; ++k)
      choose[i][k] = choose[i - 1][k - 1] + (k <= i - 1 ? choose[i - 1][k] : 0);
  }
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 1; k <= m; ++k) a[m] += choose[m][k] * a[m - k];
  return a[n];
}

Rational pattern_probability(const Pattern& pattern, const GeometricModel& model) {
  const std::size_t n = pattern.ranks.size();
  if (n == 0) throw std::invalid_argument("empty pattern");
  const Rational& q = model.q();
  const auto m = pattern.multiplicities();
  const auto tails = pattern.tail_counts();

  unsigned long weight = 0;  // sum_t (t-1) m_t
  for (std::size_t t = 0; t < m.size(); ++t) weight += static_cast<unsigned long>(t) * m[t];

  Rational result = rational_pow(model.p(), static_cast<unsigned long>(n));
  result *= rational_pow(q, weight);
  for (auto tail : tails) result /= 1 - rational_pow(q, tail);
  return result;
}

TruncatedPatternProbability pattern_probability_truncated(const Pattern& pattern,
                                                          const GeometricModel& model,
                                                          std::uint32_t cap) {
  const std::size_t n = pattern.ranks.size();
  if (n == 0) throw std::invalid_argument("empty pattern");
  const std::uint32_t d = pattern.depth();
  if (cap < d) throw std::invalid_argument("truncation cap must be >= pattern depth");

  const Rational& q = model.q();
  const auto m = pattern.multiplicities();

  // Sum q^{sum_t m_t (v_t - 1)} over all 1 <= v_1 < ... < v_d <= cap.
  Rational total = 0;
  auto rec = [&](auto&& self, std::uint32_t t, std::uint32_t v_prev, const Rational& acc) -> void {
    if (t == d) {
      total += acc;
      return;
    }
    for (std::uint32_t v = v_prev + 1; v + (d - t - 1) <= cap; ++v) {
      Rational next = acc * rational_pow(q, static_cast<unsigned long>(m[t]) * (v - 1));
      self(self, t + 1, v, next);
    }
  };
  rec(rec, 0, 0, Rational(1));

  TruncatedPatternProbability out;
  out.value = rational_pow(model.p(), static_cast<unsigned long>(n)) * total;
  out.tail_bound = Rational(static_cast<unsigned long>(n)) * rational_pow(q, cap);
  return out;
}

}  // namespace qpathlen
