#pragma once

#include <cstdint>
#include <random>

namespace girthforge {

// All randomness in the library flows from one 64-bit master seed.
// Substreams are derived with derive_seed(master, index); the index
// convention is documented at each call site (layer pairs use i*k+j,
// Monte Carlo trials use the trial index).  Only raw mt19937_64 output
// words are consumed, so identical seeds give identical results on any
// conforming implementation.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xd1342543de82ef95ULL + 1));
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform integer in [0, bound) by rejection; exact for every bound.
  uint64_t below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // Exact Bernoulli(num/den), requires 0 <= num <= den, den > 0.
  bool bernoulli(uint64_t num, uint64_t den) {
    if (num >= den) return true;
    if (num == 0) return false;
    return below(den) < num;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace girthforge
