#ifndef ALPHADOM_RANDOM_HPP_
#define ALPHADOM_RANDOM_HPP_

#include <cstdint>
#include <random>

// Portable draws on top of std::mt19937_64. The standard pins the raw engine
// sequence but not uniform_int_distribution / shuffle, so anything that must
// be reproducible across toolchains goes through these helpers.

namespace alphadom {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Independent stream seed for one purpose (graph gen, init, daemon, ...).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream));
}

// Uniform integer in [0, bound), bound >= 1. Rejection keeps it unbiased.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Bernoulli(p) from the top 53 bits.
inline bool rng_bernoulli(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

}  // namespace alphadom

#endif  // ALPHADOM_RANDOM_HPP_
