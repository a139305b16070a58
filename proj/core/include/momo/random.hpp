#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace momo {

/// Seeded pseudo-random stream shared by every stochastic step of a run.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The transforms below are written out by hand (the standard
/// distributions are implementation-defined), so a seed reproduces the same
/// draws on every platform and standard library.
///
/// Stream-splitting rule: split() consumes two 64-bit words from this stream
/// and seeds a child engine from them via std::seed_seq. A run uses a single
/// root stream; split() exists for callers that need independent sub-streams
/// (e.g. test generators); the parent continues after the two consumed words.
class RandomStream {
  public:
    using result_type = std::uint64_t;

    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Raw 64-bit word.
    result_type next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n);

    /// Standard normal draw (Box-Muller, one value per call).
    double normal();

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(items[i - 1], items[j]);
        }
    }

    RandomStream split();

    // UniformRandomBitGenerator interface, for interop only.
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

RandomStream rng_new(std::uint64_t seed);

}  // namespace momo
