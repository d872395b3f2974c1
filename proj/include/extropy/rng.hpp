#pragma once

#include <cstdint>
#include <random>

namespace extropy {

namespace detail {

// splitmix64 scramble so that nearby seeds (seed, seed+1, ...) start
// well-separated generator states.
inline std::uint64_t scramble_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Deterministic uniform stream on (0, 1), portable across standard library
/// implementations (no distribution adapters involved).
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : gen_(detail::scramble_seed(seed)) {}

    double next() {
        // 53 mantissa bits, offset by half an ulp to stay strictly inside (0,1).
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t next_u64() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace extropy
