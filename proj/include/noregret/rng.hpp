#ifndef NOREGRET_RNG_HPP_
#define NOREGRET_RNG_HPP_

// counter-based deterministic randomness: every draw is a pure function of
// (key, purpose, counters), so simulations replay bit-for-bit regardless of
// evaluation order or thread scheduling.

#include <cmath>
#include <cstdint>
#include <limits>

namespace noregret {

namespace rng_purpose {
// fixed stream tags; adding new ones must not renumber existing tags or
// previously recorded traces stop replaying.
inline constexpr std::uint64_t kValue = 1;     // buyer value draws
inline constexpr std::uint64_t kSelect = 2;    // learner arm selection noise
inline constexpr std::uint64_t kTieBreak = 3;  // auction tie permutation
inline constexpr std::uint64_t kLottery = 4;   // setup-phase lottery
inline constexpr std::uint64_t kPerturb = 5;   // test perturbations
inline constexpr std::uint64_t kTrial = 6;     // per-trial key derivation
}  // namespace rng_purpose

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// hash chain over the counters; collision-free in practice for our sizes
inline std::uint64_t derive(std::uint64_t key, std::uint64_t a,
                            std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(key ^ 0x8f462907f470ae33ULL);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return h;
}

// uniform in [0, 1): top 53 bits
inline double uniform01(std::uint64_t key, std::uint64_t a,
                        std::uint64_t b = 0, std::uint64_t c = 0) {
  return static_cast<double>(derive(key, a, b, c) >> 11) * 0x1.0p-53;
}

// uniform integer in [0, n); n <= 2^32 expected (small arm/buyer counts)
inline std::uint32_t uniform_below(std::uint64_t n, std::uint64_t key,
                                   std::uint64_t a, std::uint64_t b = 0,
                                   std::uint64_t c = 0) {
  // multiply-shift map; bias is O(n / 2^64), negligible for our n
  const std::uint64_t r = derive(key, a, b, c);
  return static_cast<std::uint32_t>(
      (static_cast<unsigned __int128>(r) * n) >> 64);
}

// standard Gumbel via inverse transform; used for softmax sampling
inline double gumbel(std::uint64_t key, std::uint64_t a, std::uint64_t b = 0,
                     std::uint64_t c = 0) {
  double u = uniform01(key, a, b, c);
  if (u <= 0.0) u = std::numeric_limits<double>::min();
  return -std::log(-std::log1p(u - 1.0));
}

}  // namespace noregret

#endif  // NOREGRET_RNG_HPP_
