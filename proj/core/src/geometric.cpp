#include "qpathlen/geometric.hpp"

#include <cmath>
#include <stdexcept>

namespace qpathlen {

GeometricModel::GeometricModel(Rational q) : q_(std::move(q)) {
  if (!in_unit_interval(q_))
    throw std::invalid_argument("geometric parameter q must satisfy 0 < q < 1");
  q_double_ = to_double(q_);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk) {
  // splitmix64 over seed advanced by the chunk index.
  std::uint64_t z = seed + (chunk + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

GeometricSampler::GeometricSampler(const GeometricModel& model, std::uint64_t seed)
    : log_q_(std::log(model.q_double())), engine_(seed) {}

Letter GeometricSampler::next() {
  // u in [0, 1) with 53 bits, so 1-u is in (0, 1] and log1p(-u) is finite.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double x = std::log1p(-u) / log_q_;
  return 1 + static_cast<Letter>(x);
}

Word GeometricSampler::word(std::size_t n) {
  Word w(n);
  for (auto& letter : w) letter = next();
  return w;
}

Word sample_word(const GeometricModel& model, std::size_t n, std::uint64_t seed) {
  GeometricSampler stream(model, seed);
  return stream.word(n);
}

}  // namespace qpathlen
