#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Reproducibility contract: every random draw in this project goes through
// std::mt19937_64 (whose output sequence the C++ standard pins bit-exactly)
// plus the hand-written mappings below. std::uniform_* distributions are
// deliberately avoided — their output is not portable across standard
// libraries. Substreams are derived with SplitMix64 so that, e.g., the
// per-epoch shuffle stream is independent of the parameter-init stream.

namespace fvt::rng {

/// SplitMix64 step; used only to derive substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for substream `stream` of a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t s = base ^ (0x517cc1b727220a95ULL * (stream + 1));
    return splitmix64(s);
}

/// Uniform double in [0, 1), 53 bits of the engine output.
inline double unit_double(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * unit_double(g);
}

/// Uniform integer in [0, n). Modulo mapping; bias is irrelevant here and
/// the result is the same on every platform.
inline std::uint64_t bounded(std::mt19937_64& g, std::uint64_t n) {
    return g() % n;
}

/// In-place Fisher-Yates shuffle with the portable bounded mapping.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded(g, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace fvt::rng
