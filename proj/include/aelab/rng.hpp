#pragma once

#include <cstdint>
#include <random>

namespace aelab {

/// splitmix64 step; also the mixer used to fan out independent seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic seed for a (stream, item) pair. Every parallel work item
/// derives its own seed from indices, never from a shared sequential
/// generator, so results do not depend on scheduling or thread count.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 std::uint64_t item = 0) {
    std::uint64_t s = base;
    s ^= splitmix64(s) + stream;
    s ^= splitmix64(s) + item;
    return splitmix64(s);
}

using Rng = std::mt19937_64;

}  // namespace aelab
