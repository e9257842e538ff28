#ifndef FITRES_PRNG_HPP
#define FITRES_PRNG_HPP

#include <cstdint>

namespace fitres {

// splitmix64: identical streams on every platform, unlike <random> distributions.
class Prng {
 public:
  explicit Prng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0
  uint64_t below(uint64_t n) { return next() % n; }

  int range(int lo, int hi) { // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool chance(uint32_t num, uint32_t den) { return below(den) < num; }

 private:
  uint64_t state_;
};

} // namespace fitres

#endif
