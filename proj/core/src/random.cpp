#include "momo/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace momo {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::size_t RandomStream::uniform_index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index: empty range");
    }
    // Lemire's multiply-shift with rejection; unbiased for every n.
    const std::uint64_t range = n;
    u128 m = static_cast<u128>(engine_()) * range;
    auto low = static_cast<std::uint64_t>(m);
    if (low < range) {
        const std::uint64_t threshold = (0 - range) % range;
        while (low < threshold) {
            m = static_cast<u128>(engine_()) * range;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::size_t>(m >> 64);
}

double RandomStream::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RandomStream RandomStream::split() {
    const std::uint64_t a = engine_();
    const std::uint64_t b = engine_();
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    RandomStream child(0);
    child.engine_.seed(seq);
    return child;
}

RandomStream rng_new(std::uint64_t seed) { return RandomStream(seed); }

}  // namespace momo
