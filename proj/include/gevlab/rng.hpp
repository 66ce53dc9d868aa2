#ifndef GEVLAB_RNG_HPP
#define GEVLAB_RNG_HPP

#include <cstdint>

namespace gevlab {

// Counter-based generator: the i-th draw is a pure function of (seed, i), so
// trial streams are reproducible and cross-language portable. This is the
// SplitMix64 finalizer applied to seed + (i+1) * golden-gamma; the exact
// recipe is documented in the README.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform01(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  // uniform in [-1, 1)
  double symmetric(std::uint64_t counter) const { return 2.0 * uniform01(counter) - 1.0; }

  // uniform in [lo, hi)
  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform01(counter);
  }

  // Derive an independent stream for a named sub-experiment.
  CounterRng stream(std::uint64_t tag) const { return CounterRng(bits(~tag)); }

 private:
  std::uint64_t seed_;
};

}  // namespace gevlab

#endif
