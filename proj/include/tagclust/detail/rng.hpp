#pragma once

#include <cstdint>
#include <random>

namespace tagclust::detail {

// mt19937_64 output is fully specified by the standard; the std::uniform_*
// distributions are not. All draws go through these helpers so results are
// identical across platforms and standard libraries.

inline double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, n). n must be > 0.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    auto i = static_cast<std::size_t>(uniform_double(rng) * static_cast<double>(n));
    return i < n ? i : n - 1;
}

}  // namespace tagclust::detail
