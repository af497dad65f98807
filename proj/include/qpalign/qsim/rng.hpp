#pragma once

#include <cstdint>
#include <random>

namespace qpalign::qsim {

/**
 * Seeded source of every random decision in a run: a 64-bit Mersenne
 * Twister (std::mt19937_64) with hand-rolled conversions, so transcripts do
 * not depend on the standard library's distribution implementations.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next() { return engine_(); }
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace qpalign::qsim
