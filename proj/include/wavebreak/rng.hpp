#ifndef WAVEBREAK_RNG_HPP
#define WAVEBREAK_RNG_HPP

#include <cstdint>
#include <random>

namespace wavebreak {

// Seeded uniform generator with results pinned across platforms: values are
// derived from the raw mt19937_64 stream, not from std distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace wavebreak

#endif
