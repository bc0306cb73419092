// rng_util.hpp — fixed-algorithm random helpers so seeded outputs are
// reproducible bit-for-bit across platforms and standard libraries.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace roleembed::detail {

/// Uniform integer in [0, bound) by rejection sampling.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Fisher-Yates shuffle driven by bounded().
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace roleembed::detail
