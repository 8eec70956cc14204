#pragma once

#include <cstdint>
#include <random>

#include "qpathlen/rational.hpp"
#include "qpathlen/word.hpp"

namespace qpathlen {

// Geometric letter model: P(letter = i) = p * q^(i-1) for i >= 1, p = 1 - q.
// q is held exactly so the same model drives both the exact oracle and the
// floating-point sampler.
class GeometricModel {
 public:
  explicit GeometricModel(Rational q);

  const Rational& q() const { return q_; }
  Rational p() const { return 1 - q_; }
  double q_double() const { return q_double_; }

 private:
  Rational q_;
  double q_double_;
};

// Deterministic substream derivation: chunk c of master seed s gets its own
// statistically-independent stream, so parallel sampling is reproducible and
// independent of the worker count.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk);

// Seeded letter stream (inverse CDF over a 53-bit uniform).
class GeometricSampler {
 public:
  GeometricSampler(const GeometricModel& model, std::uint64_t seed);

  Letter next();
  Word word(std::size_t n);

 private:
  double log_q_;
  std::mt19937_64 engine_;
};

// n i.i.d. letters from the stream seeded with `seed`.
Word sample_word(const GeometricModel& model, std::size_t n, std::uint64_t seed);

}  // namespace qpathlen
